#include "burau_forge/complex_ball.hpp"

#include <mpfr.h>

#include "burau_forge/error.hpp"

namespace burau_forge {

namespace {

mpq_class pow2(long e) {
  mpq_class r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

// floor(x * 2^prec)
mpz_class scaled_floor(const mpq_class& x, unsigned prec) {
  mpz_class num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), prec);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return out;
}

mpq_class round_nearest(const mpq_class& x, unsigned prec) {
  mpz_class f = scaled_floor(x + pow2(-static_cast<long>(prec) - 1), prec);
  return mpq_class(f) * pow2(-static_cast<long>(prec));
}

mpq_class round_up(const mpq_class& x, unsigned prec) {
  mpz_class f = scaled_floor(x, prec) + 1;
  return mpq_class(f) * pow2(-static_cast<long>(prec));
}

// Bounds for sqrt(x), x >= 0, with absolute error below 2^-bits.
mpq_class sqrt_lower(const mpq_class& x, unsigned bits) {
  if (x <= 0) return 0;
  mpz_class s = scaled_floor(x, 2 * bits);
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return mpq_class(r) * pow2(-static_cast<long>(bits));
}

mpq_class sqrt_upper(const mpq_class& x, unsigned bits) {
  if (x <= 0) return 0;
  return sqrt_lower(x, bits) + pow2(-static_cast<long>(bits));
}

mpq_class mpfr_to_q(const mpfr_t v) {
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v);
  return mpq_class(mant) * pow2(e);
}

constexpr unsigned kAbsBits = 96;

}  // namespace

ComplexBall::ComplexBall(mpq_class re, mpq_class im, mpq_class radius)
    : re_(std::move(re)), im_(std::move(im)), radius_(std::move(radius)) {
  re_.canonicalize();
  im_.canonicalize();
  radius_.canonicalize();
  if (radius_ < 0) throw DomainError("negative ball radius");
}

ComplexBall ComplexBall::rounded(unsigned prec) const {
  mpq_class r = round_nearest(re_, prec);
  mpq_class i = round_nearest(im_, prec);
  mpq_class err = qabs(re_ - r) + qabs(im_ - i);
  return ComplexBall(r, i, round_up(radius_ + err, prec));
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ + b.re_, a.im_ + b.im_, a.radius_ + b.radius_);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ - b.re_, a.im_ - b.im_, a.radius_ + b.radius_);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  mpq_class re = a.re_ * b.re_ - a.im_ * b.im_;
  mpq_class im = a.re_ * b.im_ + a.im_ * b.re_;
  const mpq_class ca = qabs(a.re_) + qabs(a.im_);
  const mpq_class cb = qabs(b.re_) + qabs(b.im_);
  mpq_class rad = ca * b.radius_ + cb * a.radius_ + a.radius_ * b.radius_;
  return ComplexBall(re, im, rad);
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  const mpq_class norm2 = b.re_ * b.re_ + b.im_ * b.im_;
  const mpq_class lo = sqrt_lower(norm2, kAbsBits);
  if (lo <= b.radius_) throw PrecisionExhausted("division by a ball containing zero");
  // 1/(c+e) - 1/c = -e / (c (c+e)), |.| <= r / (|c| (|c| - r)).
  ComplexBall recip(b.re_ / norm2, -b.im_ / norm2, b.radius_ / (lo * (lo - b.radius_)));
  return a * recip;
}

bool ComplexBall::contains(const mpq_class& re, const mpq_class& im) const {
  const mpq_class dr = re - re_, di = im - im_;
  return dr * dr + di * di <= radius_ * radius_;
}

mpq_class ComplexBall::abs_upper() const {
  return sqrt_upper(re_ * re_ + im_ * im_, kAbsBits) + radius_;
}

mpq_class ComplexBall::abs_lower() const {
  mpq_class lo = sqrt_lower(re_ * re_ + im_ * im_, kAbsBits) - radius_;
  return lo > 0 ? lo : mpq_class(0);
}

std::optional<int> ComplexBall::re_sign() const {
  if (re_lower() > 0) return 1;
  if (re_upper() < 0) return -1;
  return std::nullopt;
}

std::optional<int> ComplexBall::im_sign() const {
  if (im_lower() > 0) return 1;
  if (im_upper() < 0) return -1;
  return std::nullopt;
}

ComplexBall ComplexBall::real_sqrt(unsigned prec) const {
  if (re_lower() <= 0) throw PrecisionExhausted("square root of a ball not bounded away from zero");
  const mpq_class lo = sqrt_lower(re_lower(), prec + 8);
  const mpq_class hi = sqrt_upper(re_upper(), prec + 8);
  return ComplexBall((lo + hi) / 2, 0, (hi - lo) / 2).rounded(prec);
}

std::string ComplexBall::to_string() const {
  return "(" + std::to_string(re_.get_d()) + ", " + std::to_string(im_.get_d()) + ") +/- " +
         std::to_string(radius_.get_d());
}

ComplexBall root_of_unity_ball(long m, long j, unsigned prec) {
  if (m <= 0) throw DomainError("root of unity needs a positive order");
  j %= m;
  if (j < 0) j += m;
  if (j == 0) return ComplexBall::exact(1);
  if (2 * j == m) return ComplexBall::exact(-1);
  if (4 * j == m) return ComplexBall(0, 1, 0);
  if (4 * j == 3 * m) return ComplexBall(0, -1, 0);
  // Every MPFR operation below is correctly rounded at w bits, so the angle
  // is within 2^(5-w) of 2 pi j/m and each coordinate within 2^(6-w).
  const mpfr_prec_t w = static_cast<mpfr_prec_t>(prec) + 16;
  mpfr_t pi, theta, s, c;
  mpfr_inits2(w, pi, theta, s, c, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_si(theta, pi, 2 * j, MPFR_RNDN);
  mpfr_div_si(theta, theta, m, MPFR_RNDN);
  mpfr_sin_cos(s, c, theta, MPFR_RNDN);
  mpq_class re = mpfr_to_q(c), im = mpfr_to_q(s);
  mpfr_clears(pi, theta, s, c, static_cast<mpfr_ptr>(nullptr));
  const mpq_class err = pow2(7 - static_cast<long>(w));
  return ComplexBall(re, im, err).rounded(prec + 2);
}

}  // namespace burau_forge
