#include "burau_forge/quantum.hpp"

#include <numeric>

#include "burau_forge/error.hpp"

namespace burau_forge {

namespace {

void require_level(long p) {
  if (p < 3 || p % 4 == 2) throw DomainError("p must be >= 3 with p != 2 (mod 4)");
}

long order_of(const CyclotomicNumber& x) {
  const auto o = multiplicative_order(x);
  if (!o) throw Error("expected a root of unity");
  return *o;
}

}  // namespace

mpq_class o_of_p(long p) {
  require_level(p);
  if (p < 5) throw DomainError("o(p) is defined for p >= 5");
  mpq_class o;
  if (p % 2 == 1) {
    o = p;
  } else if (p % 8 == 4) {
    o = mpq_class(p, 4);
  } else if (p % 16 == 0) {
    o = mpq_class(p, 8);
  } else {
    o = mpq_class(p, 16);
  }
  o.canonicalize();
  return o;
}

QuantumParams build_params(long p) {
  require_level(p);
  QuantumParams qp;
  qp.p = p;
  if (p % 4 == 0) {
    qp.A = -CyclotomicNumber::root_of_unity(p, 1);
    for (long l = 0; l <= p / 2 - 2; ++l) qp.colors.push_back(l);
  } else {
    // -exp((p+1) pi i / p) = -zeta_2p^(p+1) = zeta_2p
    qp.A = -CyclotomicNumber::root_of_unity(2 * p, p + 1);
    for (long l = 0; l <= p - 3; l += 2) qp.colors.push_back(l);
  }
  const CyclotomicNumber minus_a = -qp.A;
  for (long l : qp.colors) qp.mu.push_back(minus_a.pow(l * (l + 2)).reduced());
  if (p >= 5) {
    const long e = (p % 4 == 0 || p == 5) ? -4 : -8;
    qp.q = (-qp.A.pow(e)).reduced();
    qp.o = o_of_p(p);
  }
  return qp;
}

Json to_json(const QuantumParams& qp) {
  Json j;
  j["p"] = qp.p;
  j["A_p"] = to_json(qp.A);
  j["order_A_p"] = order_of(qp.A);
  j["colors"] = qp.colors;
  Json mu = Json::array();
  for (std::size_t i = 0; i < qp.colors.size(); ++i) {
    mu.push_back({{"color", qp.colors[i]}, {"mu", to_json(qp.mu[i])}, {"order", order_of(qp.mu[i])}});
  }
  j["mu"] = std::move(mu);
  if (qp.q) {
    j["q_p"] = to_json(*qp.q);
    j["order_q_p"] = order_of(*qp.q);
  } else {
    j["q_p"] = nullptr;
  }
  j["o_p"] = qp.o ? Json(rational_to_string(*qp.o)) : Json(nullptr);
  return j;
}

long twist_projective_order(long p) {
  const QuantumParams qp = build_params(p);
  const CyclotomicNumber mu0_inv = qp.mu.front().inverse();
  long l = 1;
  for (const auto& mu : qp.mu) l = std::lcm(l, order_of(mu * mu0_inv));
  return l;
}

TriangleClassification gamma_at_p(long p) {
  const QuantumParams qp = build_params(p);
  if (!qp.q) throw DomainError("q_p is defined for p >= 5");
  const TriangleClassification c = classify(*qp.q);
  const mpq_class two_o = 2 * *qp.o;
  const long n = two_o.get_num().get_si();
  bool ok = two_o.get_den() == 1 && c.order_q == n;
  if (qp.o->get_den() == 1) {
    const long o = qp.o->get_num().get_si();
    ok = ok && c.k == o && c.signature == std::array<long, 3>{o, o, o};
  } else {
    ok = ok && c.signature == std::array<long, 3>{2, 3, n};
  }
  if (!ok) throw Error("classification of q_p disagrees with o(p) at p = " + std::to_string(p));
  return c;
}

Claim verify_quantum_orders(long p) {
  const QuantumParams qp = build_params(p);
  Claim c{"quantum-orders", "quantum-parameters", ClaimStatus::Pass, {{"p", p}}};
  const long oa = order_of(qp.A);
  const long expected_a = p % 2 == 0 ? p : 2 * p;
  bool ok = oa == expected_a;
  c.witnesses.push_back({{"quantity", "order(A_p)"}, {"value", oa}, {"expected", expected_a}});
  if (qp.q) {
    const long oq = order_of(*qp.q);
    const mpq_class two_o = 2 * *qp.o;
    ok = ok && two_o == oq;
    c.witnesses.push_back({{"quantity", "order(q_p)"}, {"value", oq}, {"expected", rational_to_string(two_o)}});
    c.witnesses.push_back({{"quantity", "o(p)"}, {"value", rational_to_string(*qp.o)}});
  } else {
    c.note = "q_p and o(p) are defined only for p >= 5";
  }
  c.status = status_of(ok);
  return c;
}

Claim verify_twist_order(long p) {
  const long order = twist_projective_order(p);
  Claim c{"twist-order", "dehn-twist-order", ClaimStatus::Pass, {{"p", p}}};
  c.params["color_convention"] = p % 2 == 0 ? "0..p/2-2" : "0,2,..,p-3";
  c.witnesses.push_back({{"quantity", "lcm order(mu_l / mu_0)"}, {"value", order}, {"expected", p}});
  if (order != p) {
    c.status = ClaimStatus::Flagged;
    c.note = "twist order differs from p under the color convention 0..p/2-2 (even p) or 0,2,..,p-3 (odd p)";
  }
  return c;
}

Claim verify_gamma_at_p(long p) {
  Claim c{"gamma-at-p", "quantum-parameters", ClaimStatus::Pass, {{"p", p}}};
  try {
    const TriangleClassification t = gamma_at_p(p);
    c.witnesses.push_back({{"o_p", rational_to_string(o_of_p(p))}, {"classification", to_json(t)}});
  } catch (const DomainError&) {
    throw;
  } catch (const Error& e) {
    c.status = ClaimStatus::Fail;
    c.note = e.what();
  }
  return c;
}

}  // namespace burau_forge
