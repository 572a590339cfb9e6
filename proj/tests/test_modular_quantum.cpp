#include <doctest.h>

#include <numeric>

#include "burau_forge/error.hpp"
#include "burau_forge/modular.hpp"
#include "burau_forge/quantum.hpp"
#include "burau_forge/triangle.hpp"
#include "support.hpp"

using namespace burau_forge;

namespace {

long count_sl2(long n) {
  long count = 0;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d)
          if (((a * d - b * c) % n + n) % n == 1 % n) ++count;
  return count;
}

/// lcm over admissible colors of the order of mu_l / mu_0, by exponent arithmetic.
long twist_order_oracle(long p) {
  long out = 1;
  if (p % 4 == 0) {
    for (long l = 0; l <= p / 2 - 2; ++l) out = std::lcm(out, p / std::gcd(p, l * (l + 2)));
  } else {
    for (long l = 0; l <= p - 3; l += 2) {
      const long e = ((p + 1) * l * (l + 2)) % (2 * p);
      out = std::lcm(out, 2 * p / std::gcd(2 * p, e));
    }
  }
  return out;
}

bool valid_level(long p) { return p >= 3 && p % 4 != 2; }

}  // namespace

TEST_SUITE("modular") {
  TEST_CASE("PSL(2, Z/n) order against enumeration") {
    CHECK(psl_order(2) == count_sl2(2));
    for (long n = 3; n <= 13; ++n) {
      CHECK(psl_order(n) == count_sl2(n) / 2);
      CHECK(psl_order_bruteforce(n) == psl_order(n));
    }
    CHECK(psl_order(7) == 168);
    CHECK(psl_order(5) == 60);
    CHECK_THROWS_AS(psl_order_bruteforce(14), DomainError);
  }

  TEST_CASE("matrices mod n") {
    const ModMatrix2 m(7, 1, -1, 0, 1);
    CHECK(m.order() == 7);
    CHECK((m * m.inverse()).is_identity());
    CHECK(m.pow(-2) == m.inverse().pow(2));
    CHECK(ModMatrix2(7, -1, 0, 0, -1).is_identity());
    CHECK(ModMatrix2(7, 6, 1, 0, 6) == ModMatrix2(7, 1, 6, 0, 1));
    CHECK_THROWS_AS(ModMatrix2(7, 2, 0, 0, 1), DomainError);
  }

  TEST_CASE("psi relations and images") {
    for (long n = 5; n <= 31; n += 2) {
      CHECK(verify_psi_relations(n).passed());
      CHECK(verify_ab_images(n).passed());
    }
    CHECK_THROWS_AS(psi_generators(8), DomainError);
  }

  TEST_CASE("s and t lie in the kernel; presentation relators") {
    for (long n = 7; n <= 31; n += 2) {
      CHECK(verify_st_kernel(n).passed());
      CHECK(verify_presentation(n).passed());
    }
    // A perturbed word leaves the kernel.
    const auto [s, t] = st_words(3);
    const auto a = GroupWord::generator(ab_alphabet(), GroupContext::free(), 0);
    CHECK_FALSE(eval_ab_word(s * a, 7).is_identity());
  }
}

TEST_SUITE("quantum") {
  TEST_CASE("orders of A_p and q_p") {
    for (long p = 3; p <= 64; ++p) {
      if (!valid_level(p)) {
        CHECK_THROWS_AS(build_params(p), DomainError);
        continue;
      }
      const auto qp = build_params(p);
      CHECK(multiplicative_order(qp.A) == (p % 2 == 0 ? p : 2 * p));
      if (p >= 5) {
        CHECK(mpq_class(*multiplicative_order(*qp.q)) == 2 * *qp.o);
      } else {
        CHECK_FALSE(qp.q.has_value());
      }
      CHECK(verify_quantum_orders(p).passed());
    }
  }

  TEST_CASE("o(p) table") {
    CHECK(o_of_p(12) == 3);
    CHECK(o_of_p(32) == 4);
    CHECK(o_of_p(24) == mpq_class(3, 2));
    CHECK(o_of_p(56) == mpq_class(7, 2));
    CHECK(o_of_p(7) == 7);
    CHECK(o_of_p(5) == 5);
    CHECK_THROWS_AS(o_of_p(4), DomainError);
  }

  TEST_CASE("admissible colors and twist eigenvalues") {
    const auto p12 = build_params(12);
    CHECK(p12.colors == std::vector<long>{0, 1, 2, 3, 4});
    const auto p7 = build_params(7);
    CHECK(p7.colors == std::vector<long>{0, 2, 4});
    CHECK(p7.mu.front().is_one());
  }

  TEST_CASE("twist order against exponent arithmetic") {
    for (long p = 3; p <= 64; ++p) {
      if (!valid_level(p)) continue;
      CHECK(twist_projective_order(p) == twist_order_oracle(p));
      if (p >= 5) CHECK(twist_projective_order(p) == p);
    }
    CHECK(verify_twist_order(3).status == ClaimStatus::Flagged);
  }

  TEST_CASE("image triangle groups") {
    const auto g12 = gamma_at_p(12);
    CHECK(g12.signature == std::array<long, 3>{3, 3, 3});
    CHECK(g12.geometry == Geometry::Euclidean);
    const auto g32 = gamma_at_p(32);
    CHECK(g32.signature == std::array<long, 3>{4, 4, 4});
    CHECK(g32.geometry == Geometry::Hyperbolic);
    const auto g56 = gamma_at_p(56);
    CHECK(g56.tag == TriangleCase::Odd);
    CHECK(g56.signature == std::array<long, 3>{2, 3, 7});
    CHECK(gamma_at_p(7).order_q == 14);
    for (long p = 5; p <= 64; ++p) {
      if (valid_level(p)) CHECK(verify_gamma_at_p(p).status != ClaimStatus::Fail);
    }
  }
}
