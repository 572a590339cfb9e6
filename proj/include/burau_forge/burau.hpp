#pragma once

#include <json.hpp>
#include <optional>
#include <vector>

#include "burau_forge/cyclotomic.hpp"
#include "burau_forge/word.hpp"

namespace burau_forge {

/// Square matrix over a cyclotomic field, row-major.
class BurauMatrix {
 public:
  explicit BurauMatrix(std::size_t size = 0);
  static BurauMatrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  CyclotomicNumber& at(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const CyclotomicNumber& at(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  friend bool operator==(const BurauMatrix& a, const BurauMatrix& b);
  /// Gauss-Jordan inverse; throws DivisionByZero when singular.
  BurauMatrix inverse() const;
  bool is_scalar() const;

 private:
  std::size_t size_;
  std::vector<CyclotomicNumber> entries_;
};

/// beta_q(g_j) in B_n, of size n - 1. Throws DomainError for j outside 1..n-1.
BurauMatrix burau_generator(long n, long j, const CyclotomicNumber& q);

/// Image of a braid word; the strand count comes from the word's context.
BurauMatrix burau_eval(const GroupWord& w, const CyclotomicNumber& q);

/// 2x2 invertible matrix, compared up to nonzero scalars.
///
/// Arithmetic is on the actual matrix so that scalars can be read off
/// (for example the value of a relation word); equality and hashing go
/// through the projective normal form.
class ProjMatrix2 {
 public:
  ProjMatrix2();  // identity
  ProjMatrix2(CyclotomicNumber a, CyclotomicNumber b, CyclotomicNumber c, CyclotomicNumber d);
  explicit ProjMatrix2(const BurauMatrix& m);

  const CyclotomicNumber& a() const { return e_[0]; }
  const CyclotomicNumber& b() const { return e_[1]; }
  const CyclotomicNumber& c() const { return e_[2]; }
  const CyclotomicNumber& d() const { return e_[3]; }
  const CyclotomicNumber& entry(int i) const { return e_[static_cast<std::size_t>(i)]; }

  CyclotomicNumber det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  CyclotomicNumber trace() const { return e_[0] + e_[3]; }

  friend ProjMatrix2 operator*(const ProjMatrix2& x, const ProjMatrix2& y);
  /// Exact inverse; throws DivisionByZero when singular.
  ProjMatrix2 inverse() const;
  ProjMatrix2 pow(long e) const;
  /// Entrywise complex conjugate transpose.
  ProjMatrix2 dagger() const;
  ProjMatrix2 galois(long j) const;

  /// The actual matrix is lambda * I.
  bool is_scalar() const;
  /// lambda when is_scalar().
  const CyclotomicNumber& scalar_value() const { return e_[0]; }

  /// Scaled so the first nonzero entry in row-major order is 1, entries in
  /// their minimal fields.
  ProjMatrix2 normalized() const;
  /// Equality of the actual matrices, not up to scalars.
  bool exactly_equal(const ProjMatrix2& o) const;

  /// Projective equality: the two entry vectors are proportional.
  friend bool operator==(const ProjMatrix2& x, const ProjMatrix2& y);

 private:
  struct Unchecked {};
  ProjMatrix2(Unchecked, CyclotomicNumber a, CyclotomicNumber b, CyclotomicNumber c, CyclotomicNumber d);
  std::vector<CyclotomicNumber> e_;
};

/// Nested arrays of cyclotomic serializations, in projective normal form.
nlohmann::ordered_json to_json(const ProjMatrix2& m);

struct GammaGenerators {
  ProjMatrix2 A, B, C;
};

/// A = beta_{-q}(g1^2), B = beta_{-q}(g2^2), C = beta_{-q}((g1 g2)^3),
/// computed through burau_eval and checked against the closed forms.
/// Throws DomainError for q = 0 or q = -1.
GammaGenerators gamma_generators(const CyclotomicNumber& q);

/// Alphabet {A, B} for words in the generators of Gamma.
Alphabet gamma_alphabet();

/// Product of generator images along a word; images must have one entry per
/// letter of the word's alphabet.
ProjMatrix2 eval_matrix_word(const GroupWord& w, const std::vector<ProjMatrix2>& images);

/// Least n <= bound with M^n scalar.
std::optional<long> projective_order(const ProjMatrix2& m, long bound);

}  // namespace burau_forge
