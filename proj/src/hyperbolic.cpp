#include "burau_forge/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <unordered_map>

#include "burau_forge/error.hpp"
#include "burau_forge/parallel.hpp"

namespace burau_forge {

namespace {

using Cn = CyclotomicNumber;
using Point = std::array<mpq_class, 2>;

long field_conductor(const Cn& q) { return q.reduced().conductor(); }

ComplexBall embed_at(const Cn& x, long j, unsigned prec) {
  const Cn r = x.reduced();
  return r.embed(j, prec);
}

/// Sign of a nonzero real number of the field, refining until decided.
int real_sign(const Cn& x, long j) {
  for (unsigned prec = 64; prec <= 8192; prec *= 2) {
    if (auto s = embed_at(x, j, prec).re_sign()) return *s;
  }
  throw PrecisionExhausted("could not decide the sign of a field element");
}

/// Basis of {v : rows . v = 0} by reduced row echelon form.
std::vector<std::array<Cn, 4>> nullspace(std::vector<std::array<Cn, 4>> rows) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][static_cast<std::size_t>(col)].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Cn inv = rows[r][static_cast<std::size_t>(col)].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][static_cast<std::size_t>(col)].is_zero()) continue;
      const Cn f = rows[i][static_cast<std::size_t>(col)];
      for (std::size_t k = 0; k < 4; ++k) rows[i][k] = rows[i][k] - f * rows[r][k];
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<std::array<Cn, 4>> basis;
  for (int free = 0; free < 4; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::array<Cn, 4> v{};
    v[static_cast<std::size_t>(free)] = Cn(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][static_cast<std::size_t>(free)];
    }
    basis.push_back(v);
  }
  return basis;
}

/// Rows of M^dagger J M - J = 0 in the unknowns J11, J12, J21, J22.
void append_invariance_rows(const ProjMatrix2& m, std::vector<std::array<Cn, 4>>& rows) {
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      std::array<Cn, 4> row{};
      for (int p = 0; p < 2; ++p) {
        for (int t = 0; t < 2; ++t) {
          Cn c = m.entry(2 * p + r).conj() * m.entry(2 * t + s);
          if (p == r && t == s) c = c - Cn(1);
          row[static_cast<std::size_t>(2 * p + t)] = c;
        }
      }
      rows.push_back(row);
    }
  }
}

std::array<Cn, 4> hermitian_part(const std::array<Cn, 4>& j0, const Cn& zeta) {
  const Cn zc = zeta.conj();
  return {zeta * j0[0] + zc * j0[0].conj(), zeta * j0[1] + zc * j0[2].conj(), zeta * j0[2] + zc * j0[1].conj(),
          zeta * j0[3] + zc * j0[3].conj()};
}

bool all_zero(const std::array<Cn, 4>& v) {
  return std::all_of(v.begin(), v.end(), [](const Cn& x) { return x.is_zero(); });
}

// ---- boundary geometry ----

mpq_class cross(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }

bool on_circle(const Point& p) { return p[0] * p[0] + p[1] * p[1] == 1; }

/// Rational point near angle theta on the unit circle.
Point circle_point(double theta) {
  theta = std::remainder(theta, 2 * M_PI);
  bool flip = false;
  if (std::abs(theta) > M_PI / 2) {
    theta -= theta > 0 ? M_PI : -M_PI;
    flip = true;
  }
  const mpq_class t(std::ldexp(std::round(std::ldexp(std::tan(theta / 2), 32)), -32));
  const mpq_class d = 1 + t * t;
  Point p{mpq_class((1 - t * t) / d), mpq_class(2 * t / d)};
  if (flip) p = {mpq_class(-p[0]), mpq_class(-p[1])};
  return p;
}

/// Ball enclosure of the cross product u x v for boundary images.
struct CrossBall {
  mpq_class center, radius;
  mpq_class lower() const { return center - radius; }
  mpq_class upper() const { return center + radius; }
};

CrossBall cross_ball(const Point& s, const ComplexBall& p) {
  return {s[0] * p.im() - s[1] * p.re(), p.radius() * (qabs(s[0]) + qabs(s[1]))};
}

CrossBall cross_ball(const ComplexBall& p, const Point& e) {
  const CrossBall c = cross_ball(e, p);
  return {-c.center, c.radius};
}

CrossBall cross_ball(const ComplexBall& u, const ComplexBall& v) {
  return {u.re() * v.im() - u.im() * v.re(),
          u.radius() * (qabs(v.re()) + qabs(v.im())) + v.radius() * (qabs(u.re()) + qabs(u.im())) + 2 * u.radius() * v.radius()};
}

/// Positive exactly when p lies outside the closed arc.
mpq_class outside_gap(const Point& p, const Arc& a) {
  const mpq_class g1 = -cross(a.start, p);
  const mpq_class g2 = -cross(p, a.end);
  return g1 > g2 ? g1 : g2;
}

/// Coordinates in which the form is alpha (|z1|^2 - |z2|^2); boundary points
/// are w = z1 / z2 on the unit circle.
struct DiskModel {
  long embedding;
  unsigned prec;
  ProjMatrix2 P, Pinv;
  ComplexBall s;

  DiskModel(const ProjMatrix2& H, long j, unsigned precision) : embedding(j), prec(precision) {
    ProjMatrix2 p0;
    ProjMatrix2 h = H;
    if (h.a().is_zero()) {
      if (!h.d().is_zero()) {
        p0 = ProjMatrix2(Cn(0), Cn(1), Cn(1), Cn(0));
      } else {
        p0 = ProjMatrix2(Cn(1), Cn(0), h.b().conj(), Cn(1));
      }
      h = p0.dagger() * H * p0;
    }
    P = p0 * ProjMatrix2(Cn(1), -h.b() / h.a(), Cn(0), Cn(1));
    Pinv = P.inverse();
    const ProjMatrix2 diag = P.dagger() * H * P;
    const Cn alpha = diag.a();
    const Cn delta = diag.d();
    if (real_sign(alpha, j) * real_sign(delta, j) >= 0) throw DomainError("form is not indefinite at this embedding");
    s = embed_at(-delta / alpha, j, prec + 8).real_sqrt(prec + 8);
  }

  /// Entries of the Moebius action of an exact matrix on boundary points.
  std::array<ComplexBall, 4> moebius(const ProjMatrix2& m) const {
    const ProjMatrix2 c = Pinv * m * P;
    const unsigned w = prec + 16;
    const ComplexBall m11 = embed_at(c.a(), embedding, w);
    const ComplexBall m12 = embed_at(c.b(), embedding, w);
    const ComplexBall m21 = embed_at(c.c(), embedding, w);
    const ComplexBall m22 = embed_at(c.d(), embedding, w);
    return {m11, (m12 / s).rounded(w), (m21 * s).rounded(w), m22};
  }
};

ComplexBall apply(const std::array<ComplexBall, 4>& n, const Point& p, unsigned prec) {
  const ComplexBall z(p[0], p[1]);
  return ((n[0] * z + n[1]) / (n[2] * z + n[3])).rounded(prec);
}

/// Attracting and repelling boundary angles, from the centers in doubles.
std::optional<std::pair<double, double>> fixed_angles(const std::array<ComplexBall, 4>& n) {
  using C = std::complex<double>;
  const auto c = [](const ComplexBall& b) { return C(b.re().get_d(), b.im().get_d()); };
  const C a = c(n[0]), b = c(n[1]), cc = c(n[2]), d = c(n[3]);
  if (std::abs(cc) < 1e-300) return std::nullopt;
  const C disc = std::sqrt((d - a) * (d - a) + 4.0 * cc * b);
  const C f1 = (a - d + disc) / (2.0 * cc);
  const C f2 = (a - d - disc) / (2.0 * cc);
  if (std::abs(std::abs(f1) - 1) > 1e-6 || std::abs(std::abs(f2) - 1) > 1e-6 || std::abs(f1 - f2) < 1e-9) {
    return std::nullopt;
  }
  const double det = std::abs(a * d - b * cc);
  const bool f1_attracts = std::norm(cc * f1 + d) > det;
  const C att = f1_attracts ? f1 : f2;
  const C rep = f1_attracts ? f2 : f1;
  return std::make_pair(std::arg(att), std::arg(rep));
}

enum class Verdict { Ok, Fail, Undecided };

struct Check {
  Verdict verdict = Verdict::Ok;
  mpq_class margin;
  bool first = true;

  void exact(const mpq_class& v) {
    if (v <= 0) verdict = Verdict::Fail;
    take(v);
  }
  void certified(const CrossBall& c) {
    if (c.upper() <= 0) {
      verdict = Verdict::Fail;
    } else if (c.lower() <= 0 && verdict == Verdict::Ok) {
      verdict = Verdict::Undecided;
    }
    take(c.lower());
  }
  void take(const mpq_class& v) {
    if (first || v < margin) margin = v;
    first = false;
  }
};

/// Images of the complement of `from` under m, inside `to`.
void check_inclusion(const std::array<ComplexBall, 4>& m, const Arc& from, const Arc& to, unsigned prec, Check& out) {
  ComplexBall p1, p2;
  try {
    p1 = apply(m, from.end, prec);
    p2 = apply(m, from.start, prec);
  } catch (const PrecisionExhausted&) {
    if (out.verdict == Verdict::Ok) out.verdict = Verdict::Undecided;
    return;
  }
  out.certified(cross_ball(to.start, p1));
  out.certified(cross_ball(p1, to.end));
  out.certified(cross_ball(to.start, p2));
  out.certified(cross_ball(p2, to.end));
  out.certified(cross_ball(p1, p2));
}

void check_arcs(const std::array<Arc, 4>& arcs, Check& out) {
  for (const Arc& a : arcs) {
    if (!on_circle(a.start) || !on_circle(a.end)) {
      out.verdict = Verdict::Fail;
      return;
    }
    out.exact(cross(a.start, a.end));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (i == k) continue;
      out.exact(outside_gap(arcs[k].start, arcs[i]));
      out.exact(outside_gap(arcs[k].end, arcs[i]));
    }
  }
}

/// Words x^a, x^-a, y^b, y^-b as Moebius maps; arcs ordered x+, x-, y+, y-.
Check check_pingpong(const std::array<std::array<ComplexBall, 4>, 4>& maps, const std::array<Arc, 4>& arcs, unsigned prec) {
  Check c;
  check_arcs(arcs, c);
  if (c.verdict == Verdict::Fail) return c;
  check_inclusion(maps[0], arcs[1], arcs[0], prec, c);
  check_inclusion(maps[1], arcs[0], arcs[1], prec, c);
  check_inclusion(maps[2], arcs[3], arcs[2], prec, c);
  check_inclusion(maps[3], arcs[2], arcs[3], prec, c);
  return c;
}

Arc arc_around(double phi, double eps) { return {circle_point(phi - eps), circle_point(phi + eps)}; }

Json point_json(const Point& p) { return Json::array({rational_to_string(p[0]), rational_to_string(p[1])}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("arc endpoint must be [re, im]");
  return {rational_from_string(j[0].get<std::string>()), rational_from_string(j[1].get<std::string>())};
}

const std::array<const char*, 4> kArcNames{"x+", "x-", "y+", "y-"};

ProjMatrix2 word_matrix(const std::string& text, const GammaGenerators& g) {
  return eval_matrix_word(GroupWord::parse(text, gamma_alphabet(), GroupContext::free()), {g.A, g.B});
}

}  // namespace

std::string to_string(Signature s) {
  switch (s) {
    case Signature::Definite: return "definite";
    case Signature::Indefinite: return "indefinite";
    case Signature::Degenerate: return "degenerate";
  }
  return "degenerate";
}

bool preserves_form(const ProjMatrix2& J, const ProjMatrix2& M) { return (M.dagger() * J * M).exactly_equal(J); }

std::optional<HermitianForm2> invariant_form(const Cn& q, long embedding) {
  const long m = field_conductor(q);
  if (std::gcd(embedding, m) != 1) throw DomainError("embedding index must be coprime to the conductor of q");
  const GammaGenerators g = gamma_generators(q);
  std::vector<std::array<Cn, 4>> rows;
  append_invariance_rows(g.A, rows);
  append_invariance_rows(g.B, rows);
  for (const auto& j0 : nullspace(rows)) {
    std::array<Cn, 4> h = hermitian_part(j0, Cn(1));
    if (all_zero(h) && m > 2) h = hermitian_part(j0, Cn::root_of_unity(m, 1));
    const Cn det = h[0] * h[3] - h[1] * h[2];
    if (all_zero(h) || det.is_zero()) continue;
    HermitianForm2 f{ProjMatrix2(h[0], h[1], h[2], h[3]), embedding, Signature::Definite};
    if (!preserves_form(f.J, g.A) || !preserves_form(f.J, g.B)) throw Error("invariant form failed exact verification");
    f.signature = real_sign(det, embedding) < 0 ? Signature::Indefinite : Signature::Definite;
    return f;
  }
  return std::nullopt;
}

std::vector<long> indefinite_embeddings(const Cn& q) {
  const long m = field_conductor(q);
  std::vector<long> out;
  for (long j = 1; j <= std::max(1L, m - 1); ++j) {
    if (std::gcd(j, m) != 1) continue;
    const auto f = invariant_form(q, j);
    if (f && f->signature == Signature::Indefinite) out.push_back(j);
  }
  return out;
}

Alphabet xy_alphabet() {
  static const Alphabet a = make_alphabet({"x", "y"});
  return a;
}

RelationSearch short_relation_oracle(const ProjMatrix2& x, const ProjMatrix2& y, int max_len) {
  if (max_len < 1) throw DomainError("max length must be >= 1");
  const int half = (max_len + 1) / 2;
  const std::array<ProjMatrix2, 4> letters{x, x.inverse(), y, y.inverse()};
  const auto key = [](const ProjMatrix2& m) {
    const ProjMatrix2 n = m.normalized();
    return n.a().to_string() + n.b().to_string() + n.c().to_string() + n.d().to_string();
  };
  const auto to_word = [](const std::vector<int>& ls) {
    std::vector<Syllable> raw;
    for (int l : ls) raw.push_back({l / 2, l % 2 == 0 ? 1 : -1});
    return GroupWord(xy_alphabet(), GroupContext::free(), raw);
  };

  struct Node {
    std::vector<int> letters;
    ProjMatrix2 m;
  };
  std::vector<std::vector<int>> words;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  RelationSearch result;

  auto insert = [&](Node node) -> bool {
    ++result.words_enumerated;
    auto& bucket = buckets[key(node.m)];
    const GroupWord v = to_word(node.letters);
    for (std::size_t u : bucket) {
      const GroupWord w = reduce(v * to_word(words[u]).inverse());
      if (!w.empty() && w.length() <= max_len) {
        result.witness = w;
        return true;
      }
    }
    bucket.push_back(words.size());
    words.push_back(std::move(node.letters));
    return false;
  };

  std::vector<Node> level{Node{{}, ProjMatrix2()}};
  if (insert(level.front())) return result;
  for (int len = 1; len <= half; ++len) {
    std::vector<std::pair<std::size_t, int>> jobs;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (int l = 0; l < 4; ++l) {
        if (!level[i].letters.empty() && (level[i].letters.back() ^ 1) == l) continue;
        jobs.emplace_back(i, l);
      }
    }
    std::vector<Node> next = parallel_map(jobs.size(), [&](std::size_t k) {
      const auto& [i, l] = jobs[k];
      Node n{level[i].letters, level[i].m * letters[static_cast<std::size_t>(l)]};
      n.letters.push_back(l);
      return n;
    });
    for (const Node& n : next) {
      if (insert(n)) return result;
    }
    level = std::move(next);
  }
  return result;
}

Json to_json(const PingPongCertificate& c) {
  Json arcs = Json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    arcs[kArcNames[i]] = Json{{"start", point_json(c.arcs[i].start)}, {"end", point_json(c.arcs[i].end)}};
  }
  Json j;
  if (const auto o = multiplicative_order(c.q)) j["order"] = *o;
  j["q"] = to_json(c.q);
  j["embedding"] = c.embedding;
  j["x"] = c.x;
  j["y"] = c.y;
  j["powers"] = Json{{"a", c.a}, {"b", c.b}};
  j["precision"] = c.precision;
  j["form"] = to_json(c.form);
  j["arcs"] = std::move(arcs);
  j["margin"] = rational_to_string(c.margin);
  return j;
}

PingPongCertificate certificate_from_json(const Json& j) {
  try {
    PingPongCertificate c;
    c.q = cyclotomic_from_json(j.at("q"));
    c.embedding = j.at("embedding").get<long>();
    c.x = j.at("x").get<std::string>();
    c.y = j.at("y").get<std::string>();
    c.a = j.at("powers").at("a").get<long>();
    c.b = j.at("powers").at("b").get<long>();
    c.precision = j.at("precision").get<unsigned>();
    const Json& f = j.at("form");
    if (!f.is_array() || f.size() != 2 || f[0].size() != 2 || f[1].size() != 2) throw ParseError("form must be a 2x2 array");
    c.form = ProjMatrix2(cyclotomic_from_json(f[0][0]), cyclotomic_from_json(f[0][1]), cyclotomic_from_json(f[1][0]),
                         cyclotomic_from_json(f[1][1]));
    for (std::size_t i = 0; i < 4; ++i) {
      const Json& a = j.at("arcs").at(kArcNames[i]);
      c.arcs[i] = {point_from_json(a.at("start")), point_from_json(a.at("end"))};
    }
    c.margin = rational_from_string(j.at("margin").get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  }
}

PingPongResult ping_pong_certify(const Cn& q, long embedding, const GroupWord& x, const GroupWord& y,
                                 const PingPongConfig& config) {
  if (config.max_power < 1) throw DomainError("max power must be >= 1");
  const auto form = invariant_form(q, embedding);
  if (!form || form->signature != Signature::Indefinite) throw DomainError("no indefinite invariant form at this embedding");
  const GammaGenerators g = gamma_generators(q);
  const ProjMatrix2 X = eval_matrix_word(x, {g.A, g.B});
  const ProjMatrix2 Y = eval_matrix_word(y, {g.A, g.B});
  if (projective_order(X, 60) || projective_order(Y, 60)) throw DomainError("x and y must have infinite projective order");

  std::vector<std::pair<long, long>> powers;
  for (long a = 1; a <= config.max_power; ++a) {
    for (long b = 1; b <= config.max_power; ++b) powers.emplace_back(a, b);
  }
  std::stable_sort(powers.begin(), powers.end(), [](const auto& u, const auto& v) {
    return std::make_pair(std::max(u.first, u.second), u.first + u.second) <
           std::make_pair(std::max(v.first, v.second), v.first + v.second);
  });
  const std::vector<double> half_widths{0.6, 0.45, 0.3, 0.2, 0.15, 0.1, 0.07, 0.05, 0.03, 0.02, 0.01, 0.005};

  PingPongResult result;
  for (unsigned prec = config.precision; prec <= config.max_precision; prec *= 2) {
    const DiskModel model(form->J, embedding, prec);
    const auto fx = fixed_angles(model.moebius(X));
    const auto fy = fixed_angles(model.moebius(Y));
    if (!fx || !fy) {
      result.outcome = SearchOutcome::NotFound;
      result.detail = "x or y is not hyperbolic in the disk model";
      return result;
    }
    std::vector<std::array<ComplexBall, 4>> xp, xm, yp, ym;
    for (long e = 1; e <= config.max_power; ++e) {
      xp.push_back(model.moebius(X.pow(e)));
      xm.push_back(model.moebius(X.pow(-e)));
      yp.push_back(model.moebius(Y.pow(e)));
      ym.push_back(model.moebius(Y.pow(-e)));
    }
    bool undecided = false;
    for (const auto& [a, b] : powers) {
      const std::array<std::array<ComplexBall, 4>, 4> maps{xp[static_cast<std::size_t>(a - 1)], xm[static_cast<std::size_t>(a - 1)],
                                                           yp[static_cast<std::size_t>(b - 1)], ym[static_cast<std::size_t>(b - 1)]};
      for (double eps : half_widths) {
        const std::array<Arc, 4> arcs{arc_around(fx->first, eps), arc_around(fx->second, eps), arc_around(fy->first, eps),
                                      arc_around(fy->second, eps)};
        Check c;
        check_arcs(arcs, c);
        if (c.verdict == Verdict::Fail) continue;
        c = check_pingpong(maps, arcs, prec);
        if (c.verdict == Verdict::Undecided) undecided = true;
        if (c.verdict != Verdict::Ok) continue;
        PingPongCertificate cert{q.reduced(), embedding, x.to_string(), y.to_string(), a, b, prec, form->J, arcs, c.margin};
        result.outcome = SearchOutcome::Found;
        result.certificate = std::move(cert);
        return result;
      }
    }
    if (!undecided) {
      result.outcome = SearchOutcome::NotFound;
      result.detail = "no ping-pong configuration within the search bounds";
      return result;
    }
  }
  result.outcome = SearchOutcome::PrecisionExhausted;
  result.detail = "inclusions stayed undecided up to " + std::to_string(config.max_precision) + " bits";
  return result;
}

bool verify_certificate(const PingPongCertificate& c) {
  try {
    if (c.a < 1 || c.b < 1 || c.precision < 16 || c.margin <= 0) return false;
    const auto form = invariant_form(c.q, c.embedding);
    if (!form || form->signature != Signature::Indefinite || !(form->J == c.form)) return false;
    const GammaGenerators g = gamma_generators(c.q);
    const ProjMatrix2 X = word_matrix(c.x, g);
    const ProjMatrix2 Y = word_matrix(c.y, g);
    if (!preserves_form(form->J, X) || !preserves_form(form->J, Y)) return false;
    const unsigned prec = 2 * c.precision;
    const DiskModel model(form->J, c.embedding, prec);
    const std::array<std::array<ComplexBall, 4>, 4> maps{model.moebius(X.pow(c.a)), model.moebius(X.pow(-c.a)),
                                                         model.moebius(Y.pow(c.b)), model.moebius(Y.pow(-c.b))};
    const Check check = check_pingpong(maps, c.arcs, prec);
    return check.verdict == Verdict::Ok && check.margin > 0;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace burau_forge
