#pragma once

#include <optional>
#include <vector>

#include "burau_forge/report.hpp"
#include "burau_forge/word.hpp"

namespace burau_forge {

/// Truncated power series in noncommuting X_1..X_r with integer coefficients.
///
/// Degree n coefficients are held densely, indexed by the letters of the
/// monomial read as a base-r number. Arithmetic is exact; a coefficient
/// overflowing 127 bits throws Error.
class MagnusSeries {
 public:
  using Coeff = __int128;

  MagnusSeries(int rank, int degree);  // zero series
  static MagnusSeries one(int rank, int degree);

  int rank() const { return rank_; }
  int degree() const { return degree_; }

  /// Coefficient of X_{w[0]} X_{w[1]} ..., letters 0-based.
  Coeff coeff(const std::vector<int>& monomial) const;
  void set_coeff(const std::vector<int>& monomial, Coeff c);
  const std::vector<Coeff>& block(int n) const { return blocks_[static_cast<std::size_t>(n)]; }

  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b);
  friend MagnusSeries operator+(const MagnusSeries& a, const MagnusSeries& b);
  friend MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b);
  friend bool operator==(const MagnusSeries& a, const MagnusSeries& b);

  /// this * (1 + X_gen)^e, truncated; e may be negative.
  MagnusSeries times_power(int gen, long e) const;
  /// (1 + X_gen)^e * this.
  MagnusSeries power_times(int gen, long e) const;

  /// Least n >= 1 with a nonzero degree-n coefficient.
  std::optional<int> lowest_nonconstant_degree() const;

 private:
  int rank_;
  int degree_;
  std::vector<std::vector<Coeff>> blocks_;
};

/// {"degree": d, "terms": {"X1 X2": c, ...}} listing nonzero terms, the
/// constant term under the key "1".
Json to_json(const MagnusSeries& s);

/// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ..., truncated at degree d.
MagnusSeries magnus_expansion(const GroupWord& w, int degree);

/// Lowest degree of a nonzero non-constant term, or nullopt when every term
/// of degree 1..dmax vanishes.
std::optional<int> magnus_depth(const GroupWord& w, int dmax);

/// Depth of an already expanded series.
std::optional<int> series_depth(const MagnusSeries& s);

}  // namespace burau_forge
