#include "burau_forge/modular.hpp"

#include <numeric>

#include "burau_forge/error.hpp"

namespace burau_forge {

namespace {

long mod(long x, long n) {
  x %= n;
  return x < 0 ? x + n : x;
}

void require_odd(long n, long min) {
  if (n % 2 == 0 || n < min) throw DomainError("modulus must be odd and >= " + std::to_string(min));
}

Json relator_witness(const std::string& word, const ModMatrix2& m) {
  Json w;
  w["word"] = word;
  w["image"] = to_json(m);
  w["trivial"] = m.is_identity();
  return w;
}

}  // namespace

ModMatrix2::ModMatrix2(long n, long a, long b, long c, long d) : n_(n), e_{mod(a, n), mod(b, n), mod(c, n), mod(d, n)} {
  if (n < 2) throw DomainError("modulus must be >= 2");
  if (mod(e_[0] * e_[3] - e_[1] * e_[2], n) != 1 % n) throw DomainError("determinant must be 1 mod n");
  for (long x : e_) {
    if (mod(2 * x, n) == 0) continue;
    if (x > n - x) {
      for (auto& y : e_) y = mod(-y, n);
    }
    break;
  }
}

ModMatrix2 operator*(const ModMatrix2& x, const ModMatrix2& y) {
  if (x.n_ != y.n_) throw DomainError("modulus mismatch");
  const long n = x.n_;
  const auto& p = x.e_;
  const auto& r = y.e_;
  return ModMatrix2(n, (p[0] * r[0] + p[1] * r[2]) % n, (p[0] * r[1] + p[1] * r[3]) % n,
                    (p[2] * r[0] + p[3] * r[2]) % n, (p[2] * r[1] + p[3] * r[3]) % n);
}

ModMatrix2 ModMatrix2::inverse() const { return ModMatrix2(n_, e_[3], -e_[1], -e_[2], e_[0]); }

ModMatrix2 ModMatrix2::pow(long e) const {
  ModMatrix2 base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  ModMatrix2 out = identity(n_);
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

long ModMatrix2::order() const {
  ModMatrix2 p = *this;
  for (long k = 1;; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
}

std::string ModMatrix2::to_string() const {
  return "[[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "],[" + std::to_string(e_[2]) + "," +
         std::to_string(e_[3]) + "]] mod " + std::to_string(n_);
}

Json to_json(const ModMatrix2& m) {
  const auto& e = m.entries();
  return Json::array({Json::array({e[0], e[1]}), Json::array({e[2], e[3]})});
}

PsiGenerators psi_generators(long n) {
  require_odd(n, 5);
  PsiGenerators g{ModMatrix2(n, 1, -1, 0, 1), ModMatrix2(n, 1, -1, 1, 0), ModMatrix2(n, 0, -1, 1, 0)};
  if (g.alpha.order() != n || g.u.order() != 3 || g.v.order() != 2) {
    throw Error("psi generators have unexpected orders mod " + std::to_string(n));
  }
  return g;
}

std::pair<ModMatrix2, ModMatrix2> ab_images(long n) {
  const auto g = psi_generators(n);
  const ModMatrix2 a2 = g.alpha.pow(2);
  const ModMatrix2 b = g.v * a2 * g.v;
  if (b != g.u.pow(2) * a2 * g.u) throw Error("the two formulas for b disagree mod " + std::to_string(n));
  return {a2, b};
}

ModMatrix2 eval_ab_word(const GroupWord& w, long n) {
  if (w.alphabet()->size() != 2) throw DomainError("expected a word over {a, b}");
  const auto [a, b] = ab_images(n);
  ModMatrix2 out = ModMatrix2::identity(n);
  for (const auto& s : w.syllables()) out = out * (s.gen == 0 ? a : b).pow(s.exp);
  return out;
}

long psl_order(long n) {
  if (n < 2) throw DomainError("modulus must be >= 2");
  long sl = n * n * n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    sl = sl / (p * p) * (p * p - 1);
  }
  if (m > 1) sl = sl / (m * m) * (m * m - 1);
  return n == 2 ? sl : sl / 2;
}

long psl_order_bruteforce(long n) {
  if (n <= 2 || n > 13) throw DomainError("brute-force order needs 2 < n <= 13");
  long count = 0;
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      for (long c = 0; c < n; ++c) {
        for (long d = 0; d < n; ++d) {
          if ((a * d - b * c - 1) % n == 0) ++count;
        }
      }
    }
  }
  return count / 2;
}

Claim verify_psi_relations(long n) {
  const auto g = psi_generators(n);
  Claim c{"psi-relations", "delta-2-3-n-to-psl", ClaimStatus::Pass, {{"n", n}}};
  const std::pair<std::string, ModMatrix2> rel[] = {{"alpha^" + std::to_string(n), g.alpha.pow(n)},
                                                    {"u^3", g.u.pow(3)},
                                                    {"v^2", g.v.pow(2)},
                                                    {"alpha u v", g.alpha * g.u * g.v}};
  bool ok = true;
  for (const auto& [word, m] : rel) {
    c.witnesses.push_back(relator_witness(word, m));
    ok = ok && m.is_identity();
  }
  c.status = status_of(ok);
  return c;
}

Claim verify_ab_images(long n) {
  require_odd(n, 5);
  Claim c{"ab-images", "odd-embedding-identities", ClaimStatus::Pass, {{"n", n}}};
  const auto g = psi_generators(n);
  const ModMatrix2 a2 = g.alpha.pow(2);
  const ModMatrix2 b1 = g.v * a2 * g.v;
  const ModMatrix2 b2 = g.u.pow(2) * a2 * g.u;
  c.witnesses.push_back({{"word", "alpha^2"}, {"image", to_json(a2)}});
  c.witnesses.push_back({{"word", "v alpha^2 v"}, {"image", to_json(b1)}});
  c.witnesses.push_back({{"word", "u^2 alpha^2 u"}, {"image", to_json(b2)}});
  c.status = status_of(b1 == b2 && a2.order() == n);
  return c;
}

Claim verify_st_kernel(long n) {
  require_odd(n, 7);
  const long k = (n - 1) / 2;
  Claim c{"st-kernel", "st-kernel-membership", ClaimStatus::Pass, {{"n", n}, {"k", k}}};
  const auto [s, t] = st_words(k);
  const ModMatrix2 ms = eval_ab_word(s, n);
  const ModMatrix2 mt = eval_ab_word(t, n);
  c.witnesses.push_back(relator_witness("s = " + s.to_string(), ms));
  c.witnesses.push_back(relator_witness("t = " + t.to_string(), mt));
  c.status = status_of(ms.is_identity() && mt.is_identity());
  return c;
}

Claim verify_presentation(long n) {
  require_odd(n, 7);
  const long k = (n - 1) / 2;
  const auto p = psi_generators(n);
  const ModMatrix2 g = p.v * p.alpha.pow(k) * p.v * p.alpha.pow(-2) * p.v * p.alpha.pow(k);
  Claim c{"presentation", "psl-presentation", ClaimStatus::Pass, {{"n", n}, {"k", k}}};
  const std::pair<std::string, ModMatrix2> rel[] = {{"alpha^n", p.alpha.pow(n)},
                                                    {"u^3", p.u.pow(3)},
                                                    {"v^2", p.v.pow(2)},
                                                    {"g v g v", g * p.v * g * p.v},
                                                    {"g alpha g^-1 alpha^-4", g * p.alpha * g.inverse() * p.alpha.pow(-4)}};
  bool ok = true;
  for (const auto& [word, m] : rel) {
    c.witnesses.push_back(relator_witness(word, m));
    ok = ok && m.is_identity();
  }
  c.witnesses.push_back({{"word", "g"}, {"definition", "v alpha^k v alpha^-2 v alpha^k"}, {"image", to_json(g)}});
  c.status = status_of(ok);
  return c;
}

Claim verify_psl_order(long n) {
  const long closed = psl_order(n);
  const long brute = psl_order_bruteforce(n);
  Claim c{"psl-order", "psl-order", ClaimStatus::Pass, {{"n", n}}};
  c.witnesses.push_back({{"closed_form", closed}, {"enumeration", brute}});
  c.status = status_of(closed == brute);
  return c;
}

}  // namespace burau_forge
