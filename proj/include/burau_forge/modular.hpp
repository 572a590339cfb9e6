#pragma once

#include <array>
#include <string>
#include <utility>

#include "burau_forge/report.hpp"
#include "burau_forge/word.hpp"

namespace burau_forge {

/// Element of PSL(2, Z/n), stored with a canonical sign so that equality is
/// entrywise: the first entry x with 2x != 0 (mod n) satisfies x < n - x.
class ModMatrix2 {
 public:
  /// Throws DomainError unless n >= 2 and the determinant is 1 mod n.
  ModMatrix2(long n, long a, long b, long c, long d);
  static ModMatrix2 identity(long n) { return ModMatrix2(n, 1, 0, 0, 1); }

  long modulus() const { return n_; }
  const std::array<long, 4>& entries() const { return e_; }

  friend ModMatrix2 operator*(const ModMatrix2& x, const ModMatrix2& y);
  friend bool operator==(const ModMatrix2& x, const ModMatrix2& y) = default;
  ModMatrix2 inverse() const;
  ModMatrix2 pow(long e) const;
  bool is_identity() const { return *this == identity(n_); }
  /// Least k >= 1 with M^k = +-I.
  long order() const;

  std::string to_string() const;

 private:
  long n_;
  std::array<long, 4> e_;
};

Json to_json(const ModMatrix2& m);

struct PsiGenerators {
  ModMatrix2 alpha, u, v;
};

/// psi(alpha) = [[1,-1],[0,1]], psi(u) = [[1,-1],[1,0]], psi(v) = [[0,-1],[1,0]]
/// mod n; checks that the orders are n, 3 and 2. n odd, n >= 5.
PsiGenerators psi_generators(long n);

/// (a, b) = (alpha^2, v alpha^2 v); throws Error if v alpha^2 v != u^2 alpha^2 u.
std::pair<ModMatrix2, ModMatrix2> ab_images(long n);

/// Image of a word over {a, b} under a -> alpha^2, b -> v alpha^2 v.
ModMatrix2 eval_ab_word(const GroupWord& w, long n);

/// |PSL(2, Z/n)| from n^3 prod (1 - 1/p^2), halved for n > 2.
long psl_order(long n);
/// Enumeration of determinant-one matrices; 2 < n <= 13.
long psl_order_bruteforce(long n);

/// psi(alpha)^n, psi(u)^3, psi(v)^2 and psi(alpha) psi(u) psi(v) are +-I; odd n >= 5.
Claim verify_psi_relations(long n);
/// The two formulas for b agree.
Claim verify_ab_images(long n);
/// s(k) and t(k) map to +-I for n = 2k + 1 >= 7.
Claim verify_st_kernel(long n);
/// The five relators of the PSL(2, Z/n) presentation are +-I; odd n >= 7.
Claim verify_presentation(long n);
/// Closed-form order against enumeration.
Claim verify_psl_order(long n);

}  // namespace burau_forge
