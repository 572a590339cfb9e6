// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "burau_forge/artin.hpp"
#include "burau_forge/error.hpp"
#include "burau_forge/hyperbolic.hpp"
#include "burau_forge/modular.hpp"
#include "burau_forge/quantum.hpp"
#include "burau_forge/triangle.hpp"
#include "support.hpp"

using namespace burau_forge;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no limit
  std::function<Result()> run;
};

bool all_pass(const Claim& c) { return c.status == ClaimStatus::Pass; }

CyclotomicNumber random_root(std::mt19937& rng) {
  std::uniform_int_distribution<long> order(3, 60);
  for (;;) {
    const long m = order(rng);
    std::uniform_int_distribution<long> idx(1, m - 1);
    const long j = idx(rng);
    if (std::gcd(j, m) == 1 && 2 * j != m) return CyclotomicNumber::root_of_unity(m, j);
  }
}

GroupWord braid3(const std::string& s) { return GroupWord::parse(s, braid_alphabet(3), GroupContext::braid(3)); }

GroupWord random_free_word(std::mt19937& rng, const Alphabet& al, int max_syllables, int max_exp) {
  return test_support::random_word(rng, al, GroupContext::free(), max_syllables, max_exp);
}

Result burau_base_case() {
  std::mt19937 rng(2024);
  Result r;
  int roots = 0;
  for (int trial = 0; trial < 20; ++trial, ++roots) {
    const CyclotomicNumber q = random_root(rng);
    const CyclotomicNumber z(0), one(1);
    // Entries are affine in q, so agreement at two distinct values is a symbolic identity.
    const auto g1 = burau_generator(3, 1, q), g2 = burau_generator(3, 2, q);
    bool ok = g1.at(0, 0) == -q && g1.at(0, 1) == one && g1.at(1, 0) == z && g1.at(1, 1) == one;
    ok = ok && g2.at(0, 0) == one && g2.at(0, 1) == z && g2.at(1, 0) == q && g2.at(1, 1) == -q;
    const auto h1 = burau_generator(4, 1, q), h2 = burau_generator(4, 2, q), h3 = burau_generator(4, 3, q);
    const CyclotomicNumber e1[3][3] = {{-q, one, z}, {z, one, z}, {z, z, one}};
    const CyclotomicNumber e2[3][3] = {{one, z, z}, {q, -q, one}, {z, z, one}};
    const CyclotomicNumber e3[3][3] = {{one, z, z}, {z, one, z}, {z, q, -q}};
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) ok = ok && h1.at(a, b) == e1[a][b] && h2.at(a, b) == e2[a][b] && h3.at(a, b) == e3[a][b];
    const auto g = gamma_generators(q);
    const auto q2 = q * q;
    ok = ok && g.A.exactly_equal(ProjMatrix2(q2, 1 + q, 0, 1)) && g.B.exactly_equal(ProjMatrix2(1, 0, -q - q2, q2)) &&
         g.C.exactly_equal(ProjMatrix2(-q2 * q, 0, 0, -q2 * q));
    if (!ok) {
      r.ok = false;
      r.detail = "mismatch at q = " + q.to_string();
      return r;
    }
  }
  r.detail = std::to_string(roots) + " random roots";
  return r;
}

Result orbit_range(const std::function<Claim(long)>& f, long lo, long hi, const std::set<long>& skip = {}) {
  Result r;
  long checked = 0;
  for (long v = lo; v <= hi; ++v) {
    if (skip.count(v)) continue;
    const Claim c = f(v);
    ++checked;
    if (!all_pass(c)) {
      r.ok = false;
      r.detail = "failed at " + std::to_string(v);
      return r;
    }
  }
  r.detail = std::to_string(checked) + " parameters";
  return r;
}

Result kernel_criterion() {
  Result r = orbit_range(verify_kernel_orbit, 3, 30, {6});
  if (!r.ok) return r;
  const Claim two = verify_kernel_orbit(2);
  if (two.status != ClaimStatus::Flagged) {
    r.ok = false;
    r.detail = "n = 2 not flagged";
    return r;
  }
  r.detail += ", n = 2 flagged";
  return r;
}

Result quantum_criterion() {
  Result r;
  int flagged = 0, levels = 0;
  for (long p = 3; p <= 64; ++p) {
    if (p % 4 == 2) continue;
    ++levels;
    if (!all_pass(verify_quantum_orders(p))) {
      r.ok = false;
      r.detail = "orders fail at p = " + std::to_string(p);
      return r;
    }
    if (p >= 5) {
      const Claim t = verify_twist_order(p);
      if (t.status == ClaimStatus::Fail) {
        r.ok = false;
        r.detail = "twist order fails at p = " + std::to_string(p);
        return r;
      }
      if (t.status == ClaimStatus::Flagged) ++flagged;
    }
  }
  r.detail = std::to_string(levels) + " levels, " + std::to_string(flagged) + " flagged twist orders";
  return r;
}

Result euler_criterion() {
  Result r;
  r.ok = f_of_n(7) == 4 && f_prime_closed_form(7) == 4;
  for (long n = 7; n <= 50; ++n) {
    bool prime = n > 1;
    for (long d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    if (prime) r.ok = r.ok && f_of_n(n) == f_prime_closed_form(n);
  }
  r.ok = r.ok && euler_characteristic(7).second == -4;
  for (long n = 3; n <= 13; ++n) r.ok = r.ok && all_pass(verify_psl_order(n));
  r.detail = r.ok ? "f(7) = 4, chi = -4, primes to 50, orders to 13" : "mismatch";
  return r;
}

Result st_criterion() {
  Result r;
  for (long n = 7; n <= 31; n += 2) {
    if (!all_pass(verify_st_kernel(n)) || !all_pass(verify_presentation(n))) {
      r.ok = false;
      r.detail = "failed at n = " + std::to_string(n);
      return r;
    }
  }
  r.detail = "odd n in 7..31";
  return r;
}

Result oracle_criterion() {
  Result r;
  const auto al = gamma_alphabet();
  const auto x = GroupWord::parse("[A,B]", al, GroupContext::free());
  const auto y = GroupWord::parse("[A^2,B]", al, GroupContext::free());
  const auto g14 = gamma_generators(CyclotomicNumber::root_of_unity(14, 1));
  const auto none = short_relation_oracle(eval_matrix_word(x, {g14.A, g14.B}), eval_matrix_word(y, {g14.A, g14.B}), 6);
  // Order 5: -q has order 10, in the finite-image set.
  const auto q5 = CyclotomicNumber::root_of_unity(5, 1);
  const auto g5 = gamma_generators(q5);
  const auto X5 = eval_matrix_word(x, {g5.A, g5.B}), Y5 = eval_matrix_word(y, {g5.A, g5.B});
  const auto some = short_relation_oracle(X5, Y5, 20);
  r.ok = !none.witness && some.witness && some.witness->length() <= 20 && eval_matrix_word(*some.witness, {X5, Y5}).is_scalar() &&
         classify(q5).tag == TriangleCase::FiniteImage;
  r.detail = "order 14: " + std::to_string(none.words_enumerated) + " words, no relation; order 5 witness " +
             (some.witness ? some.witness->to_string() : "none");
  return r;
}

Result pingpong_criterion() {
  Result r;
  const auto q = CyclotomicNumber::root_of_unity(14, 1);
  const auto al = gamma_alphabet();
  const auto x = GroupWord::parse("[A,B]", al, GroupContext::free());
  const auto y = GroupWord::parse("[A^2,B]", al, GroupContext::free());
  const auto embeddings = indefinite_embeddings(q);
  if (embeddings.empty()) return {false, "no indefinite embedding"};
  PingPongConfig cfg;
  cfg.max_power = 4;
  const auto res = ping_pong_certify(q, embeddings.front(), x, y, cfg);
  if (res.outcome != SearchOutcome::Found) return {false, "no certificate: " + res.detail};
  const PingPongCertificate& c = *res.certificate;
  r.ok = c.a <= 4 && c.b <= 4 && c.margin > 0 && verify_certificate(c) &&
         verify_certificate(certificate_from_json(Json::parse(to_json(c).dump())));
  int rejected = 0, tried = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (int which = 0; which < 2; ++which) {
      for (const mpq_class& delta : {mpq_class(1, 1000000000), mpq_class(-1, 1000)}) {
        auto t = c;
        auto& pt = which == 0 ? t.arcs[i].start : t.arcs[i].end;
        pt[0] += delta;
        ++tried;
        if (!verify_certificate(t)) ++rejected;
      }
    }
  }
  r.ok = r.ok && rejected == tried;
  r.detail = "a = " + std::to_string(c.a) + ", b = " + std::to_string(c.b) + ", margin ~ " + std::to_string(c.margin.get_d()) +
             ", rejected " + std::to_string(rejected) + "/" + std::to_string(tried) + " perturbations";
  return r;
}

Result artin_criterion() {
  Result r;
  r.ok = artin_action(braid3("g1 g2 g1")) == artin_action(braid3("g2 g1 g2"));
  std::mt19937 rng(99);
  const auto ab = ab_alphabet();
  int brackets = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 3;
    const auto u = random_free_word(rng, ab, 3, 2);
    const auto v = random_free_word(rng, ab, 3, 2);
    const auto b = ab_to_braid(iterated_bracket(u, v, k));
    for (int i = 1; i <= 3; ++i) {
      const auto d = series_depth(longitude_magnus(b, i, k));
      r.ok = r.ok && (!d || *d >= k);
    }
    ++brackets;
  }
  const auto f3 = free3_alphabet();
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_free_word(rng, f3, 6, 3);
    const auto v = random_free_word(rng, f3, 6, 3);
    r.ok = r.ok && magnus_expansion(u * v, 4) == magnus_expansion(u, 4) * magnus_expansion(v, 4);
  }
  int eta_words = 0;
  while (eta_words < 100) {
    GroupWord w = random_free_word(rng, f3, 4, 2);
    if (eta_words % 3 == 1) w = commutator(w, random_free_word(rng, f3, 3, 2));
    if (eta_words % 3 == 2) w = commutator(commutator(w, random_free_word(rng, f3, 2, 1)), random_free_word(rng, f3, 2, 1));
    const auto d = magnus_depth(w, 3);
    if (!d) continue;
    r.ok = r.ok && magnus_depth(eta_embed(w), 2 * *d) == 2 * *d;
    ++eta_words;
  }
  r.detail = std::to_string(brackets) + " brackets, 200 products, " + std::to_string(eta_words) + " eta words";
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "burau base case", 1, burau_base_case},
      {2, "even presentation k = 4..24", 30, [] { return orbit_range(verify_even_orbit, 4, 24); }},
      {3, "odd presentation k = 3..15", 30, [] { return orbit_range(verify_odd_orbit, 3, 15); }},
      {4, "embedding identities k = 3..15", 30, [] { return orbit_range(verify_embedding_orbit, 3, 15); }},
      {5, "kernel normal generators n = 3..30", 0, kernel_criterion},
      {6, "one-relator identity r = 2..50", 5, [] { return orbit_range(verify_one_relator, 2, 50); }},
      {7, "quantum parameters p <= 64", 0, quantum_criterion},
      {8, "f(n), Euler characteristic, PSL orders", 0, euler_criterion},
      {9, "s, t kernel and PSL presentation n = 7..31", 10, st_criterion},
      {10, "short relation oracle", 60, oracle_criterion},
      {11, "ping-pong certificate", 120, pingpong_criterion},
      {12, "Artin action and Magnus depths", 60, artin_criterion},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || s <= c.limit_s;
    const bool pass = r.ok && in_time;
    if (!pass) ++failures;
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", s, c.limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", s);
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ") " << r.detail
              << (in_time ? "" : " [time limit exceeded]") << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
