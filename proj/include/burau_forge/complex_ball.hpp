#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace burau_forge {

/// Closed disk {z : |z - center| <= radius} with rational center and radius.
///
/// Every operation returns a ball that contains the exact result for all
/// inputs drawn from the operand balls. Centers are rounded to a dyadic grid
/// of `prec` bits after each operation; the rounding error is added to the
/// radius, so enclosures are outward-rounded.
class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(mpq_class re, mpq_class im, mpq_class radius = 0);
  static ComplexBall exact(const mpq_class& re) { return ComplexBall(re, 0, 0); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  const mpq_class& radius() const { return radius_; }

  /// Rounds the center to multiples of 2^-prec, inflating the radius.
  ComplexBall rounded(unsigned prec) const;

  ComplexBall operator-() const { return ComplexBall(-re_, -im_, radius_); }
  ComplexBall conj() const { return ComplexBall(re_, -im_, radius_); }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  /// Throws PrecisionExhausted when the divisor ball contains zero.
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

  bool contains(const mpq_class& re, const mpq_class& im) const;
  bool contains_zero() const { return contains(0, 0); }

  /// Upper bound for |z| over the ball (L1 norm of the center plus radius).
  mpq_class abs_upper() const;
  /// Lower bound for |z| over the ball, clamped at zero.
  mpq_class abs_lower() const;

  /// Lower and upper bounds of the real part.
  mpq_class re_lower() const { return re_ - radius_; }
  mpq_class re_upper() const { return re_ + radius_; }
  mpq_class im_lower() const { return im_ - radius_; }
  mpq_class im_upper() const { return im_ + radius_; }

  /// Sign of the real part when the ball decides it, else nullopt.
  std::optional<int> re_sign() const;
  std::optional<int> im_sign() const;

  /// Enclosure of sqrt(x) for a ball meeting the real axis only in (0, inf);
  /// the imaginary part is discarded (callers pass balls of real numbers).
  ComplexBall real_sqrt(unsigned prec) const;

  std::string to_string() const;

 private:
  mpq_class re_, im_, radius_;
};

/// Enclosure of exp(2 pi i j / m) of radius at most 4 * 2^-prec.
ComplexBall root_of_unity_ball(long m, long j, unsigned prec);

/// |x - y| for rationals.
inline mpq_class qabs(const mpq_class& x) { return x < 0 ? mpq_class(-x) : x; }

}  // namespace burau_forge
