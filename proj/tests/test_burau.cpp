#include <doctest.h>

#include "burau_forge/burau.hpp"
#include "burau_forge/error.hpp"
#include "support.hpp"

using namespace burau_forge;
using test_support::cd;

namespace {

using NumMat = std::vector<std::vector<cd>>;

/// Reduced Burau generator written out entrywise from its displayed form.
NumMat numeric_generator(long n, long j, cd q) {
  const std::size_t d = static_cast<std::size_t>(n - 1);
  NumMat m(d, std::vector<cd>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  const std::size_t r = static_cast<std::size_t>(j - 1);
  m[r][r] = -q;
  if (r > 0) m[r][r - 1] = q;
  if (r + 1 < d) m[r][r + 1] = 1;
  return m;
}

NumMat mul(const NumMat& a, const NumMat& b) {
  NumMat c(a.size(), std::vector<cd>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

NumMat inv2_or_gauss(NumMat a) {
  const std::size_t n = a.size();
  NumMat inv(n, std::vector<cd>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (std::abs(a[p][c]) < 1e-12) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const cd f = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= f;
      inv[c][j] /= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const cd g = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= g * a[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

NumMat numeric_eval(const GroupWord& w, cd q) {
  const long n = w.context().param;
  NumMat m(static_cast<std::size_t>(n - 1), std::vector<cd>(static_cast<std::size_t>(n - 1), 0));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  for (const auto& s : w.syllables()) {
    NumMat g = numeric_generator(n, s.gen + 1, q);
    if (s.exp < 0) g = inv2_or_gauss(g);
    for (long t = 0; t < std::labs(s.exp); ++t) m = mul(m, g);
  }
  return m;
}

CyclotomicNumber random_root(std::mt19937& rng) {
  std::uniform_int_distribution<long> order(3, 60);
  for (;;) {
    const long m = order(rng);
    std::uniform_int_distribution<long> idx(1, m - 1);
    const long j = idx(rng);
    if (std::gcd(j, m) == 1 && 2 * j != m) return CyclotomicNumber::root_of_unity(m, j);
  }
}

}  // namespace

TEST_SUITE("burau") {
  TEST_CASE("generators match the displayed forms for n = 3, 4") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 6; ++trial) {
      const auto q = random_root(rng);
      const CyclotomicNumber z(0), one(1);
      const auto g1 = burau_generator(3, 1, q);
      CHECK(g1.at(0, 0) == -q);
      CHECK(g1.at(0, 1) == one);
      CHECK(g1.at(1, 0) == z);
      CHECK(g1.at(1, 1) == one);
      const auto g2 = burau_generator(3, 2, q);
      CHECK(g2.at(1, 0) == q);
      CHECK(g2.at(1, 1) == -q);
      CHECK(g2.at(0, 0) == one);
      CHECK(g2.at(0, 1) == z);
      const auto h2 = burau_generator(4, 2, q);
      const CyclotomicNumber expected[3][3] = {{one, z, z}, {q, -q, one}, {z, z, one}};
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(h2.at(r, c) == expected[r][c]);
      const auto h3 = burau_generator(4, 3, q);
      CHECK(h3.at(2, 1) == q);
      CHECK(h3.at(2, 2) == -q);
      CHECK(h3.at(0, 0) == one);
    }
    CHECK_THROWS_AS(burau_generator(3, 3, CyclotomicNumber(2)), DomainError);
  }

  TEST_CASE("braid relations hold exactly") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const auto q = random_root(rng);
      for (long n : {3L, 4L, 5L}) {
        const auto al = braid_alphabet(n);
        const auto ctx = GroupContext::braid(n);
        for (long i = 1; i + 1 < n; ++i) {
          const std::string gi = "g" + std::to_string(i), gj = "g" + std::to_string(i + 1);
          CHECK(burau_eval(GroupWord::parse(gi + " " + gj + " " + gi, al, ctx), q) ==
                burau_eval(GroupWord::parse(gj + " " + gi + " " + gj, al, ctx), q));
        }
        if (n >= 4) {
          CHECK(burau_eval(GroupWord::parse("g1 g3", al, ctx), q) == burau_eval(GroupWord::parse("g3 g1", al, ctx), q));
        }
      }
    }
  }

  TEST_CASE("words agree with a floating-point evaluation") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      const long n = 3 + trial % 2;
      const auto q = random_root(rng);
      const auto w = test_support::random_word(rng, braid_alphabet(n), GroupContext::braid(n), 6, 2);
      const auto exact = burau_eval(w, q);
      const auto num = numeric_eval(w, test_support::eval_numeric(q));
      for (std::size_t r = 0; r < exact.size(); ++r)
        for (std::size_t c = 0; c < exact.size(); ++c)
          CHECK(std::abs(test_support::eval_numeric(exact.at(r, c)) - num[r][c]) < 1e-8);
    }
  }

  TEST_CASE("A, B, C closed forms") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const auto q = random_root(rng);
      const auto g = gamma_generators(q);
      CHECK(g.A.exactly_equal(ProjMatrix2(q * q, 1 + q, 0, 1)));
      CHECK(g.B.exactly_equal(ProjMatrix2(1, 0, -q - q * q, q * q)));
      CHECK(g.C.is_scalar());
      CHECK(g.C.scalar_value() == -q.pow(3));
    }
    CHECK_THROWS_AS(gamma_generators(CyclotomicNumber(0)), DomainError);
    CHECK_THROWS_AS(gamma_generators(CyclotomicNumber(-1)), DomainError);
  }

  TEST_CASE("projective matrices") {
    const auto q = CyclotomicNumber::root_of_unity(14, 1);
    const auto g = gamma_generators(q);
    const ProjMatrix2 scaled(g.A.a() * q, g.A.b() * q, g.A.c() * q, g.A.d() * q);
    CHECK(scaled == g.A);
    CHECK_FALSE(scaled.exactly_equal(g.A));
    CHECK((g.A * g.A.inverse()).exactly_equal(ProjMatrix2()));
    CHECK(g.A.pow(-3) == g.A.inverse().pow(3));
    CHECK(g.A.pow(0).exactly_equal(ProjMatrix2()));
    CHECK(projective_order(g.A, 100) == 7);
    CHECK(projective_order(g.B, 100) == 7);
    CHECK_FALSE(projective_order(g.A * g.B * g.A.inverse() * g.B.inverse(), 100).has_value());
    CHECK(g.A.normalized().a().is_one());
    CHECK_THROWS_AS(ProjMatrix2(1, 1, 1, 1), DomainError);
    CHECK((g.A * g.B).dagger() == g.B.dagger() * g.A.dagger());
  }

  TEST_CASE("projective order of A is the order of q^2") {
    for (long m = 3; m <= 30; ++m) {
      for (long j = 1; j < m; ++j) {
        if (std::gcd(j, m) != 1 || 2 * j == m) continue;
        const auto q = CyclotomicNumber::root_of_unity(m, j);
        const long expected = m % 2 == 0 ? m / 2 : m;
        CHECK(projective_order(gamma_generators(q).A, 100) == expected);
      }
    }
  }
}
