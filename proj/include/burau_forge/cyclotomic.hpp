#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "burau_forge/complex_ball.hpp"

namespace burau_forge {

/// Element of the cyclotomic field Q(zeta_m), stored as rational coefficients
/// in the power basis 1, zeta_m, ..., zeta_m^(phi(m)-1) modulo Phi_m.
///
/// Binary operations coerce both operands into Q(zeta_lcm). Equality is exact
/// at any conductor. `reduced()` moves a value to the smallest cyclotomic
/// field containing it, with conductor normalized to m != 2 (mod 4); this is
/// the form used for serialization and for the values returned by
/// `root_of_unity`.
class CyclotomicNumber {
 public:
  CyclotomicNumber();  // zero
  CyclotomicNumber(long value);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  /// Coefficients must have length phi(conductor).
  CyclotomicNumber(long conductor, std::vector<mpq_class> coeffs);

  /// zeta_m^j in its minimal field.
  static CyclotomicNumber root_of_unity(long m, long j);

  long conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The rational value; only valid when is_rational().
  mpq_class rational_value() const;

  /// The same value written over Q(zeta_target); conductor must divide target.
  CyclotomicNumber lifted(long target) const;
  /// The same value in its minimal cyclotomic field.
  CyclotomicNumber reduced() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  /// Throws DivisionByZero.
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  /// Throws DivisionByZero on zero.
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;

  /// Image under zeta_m -> zeta_m^j; gcd(j, m) must be 1.
  CyclotomicNumber galois(long j) const;
  /// Complex conjugation, zeta -> zeta^-1.
  CyclotomicNumber conj() const { return galois(-1); }

  /// Ball of radius <= 2^-prec around the image under zeta_m -> exp(2 pi i j/m).
  ComplexBall embed(long j, unsigned prec) const;

  /// Canonical text "p/q" list with conductor, e.g. "[12: 0, 0, 1, 0]".
  std::string to_string() const;

 private:
  long conductor_;
  std::vector<mpq_class> coeffs_;
};

long euler_phi(long m);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Smallest n >= 1 with x^n = 1, or nullopt when x is not a root of unity.
/// Throws DivisionByZero for x = 0.
std::optional<long> multiplicative_order(const CyclotomicNumber& x);

/// Images of x under all automorphisms zeta_m -> zeta_m^j, j coprime to the
/// conductor, in increasing order of j.
std::vector<CyclotomicNumber> galois_conjugates(const CyclotomicNumber& x);

/// Embedding shorthand; throws DomainError unless gcd(j, conductor) = 1.
ComplexBall embed(const CyclotomicNumber& x, long j, unsigned prec);

/// {"conductor": m, "coeffs": ["p/q", ...]} of the reduced form.
nlohmann::ordered_json to_json(const CyclotomicNumber& x);
/// Throws ParseError.
CyclotomicNumber cyclotomic_from_json(const nlohmann::ordered_json& j);

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

}  // namespace burau_forge
