#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "burau_forge/burau.hpp"
#include "burau_forge/report.hpp"

namespace burau_forge {

enum class TriangleCase { FiniteImage, Even, Odd };
enum class Geometry { Spherical, Euclidean, Hyperbolic };

std::string to_string(TriangleCase c);
std::string to_string(Geometry g);

struct TriangleClassification {
  long order_q = 0;        // order of q
  long order_minus_q = 0;  // order of the parameter -q fed to the Burau matrices
  TriangleCase tag = TriangleCase::Even;
  long k = 0;                          // order_q = 2k or 2k + 1
  std::array<long, 3> signature{};     // (m, n, p) of the triangle group
  Geometry geometry = Geometry::Hyperbolic;
  friend bool operator==(const TriangleClassification&, const TriangleClassification&) = default;
};

/// The finite-image orders are those of -q: {1, 2, 3, 4, 6, 10}.
TriangleClassification classify_order(long order_q);
/// Throws DomainError when q is not a root of unity.
TriangleClassification classify(const CyclotomicNumber& q);
Json to_json(const TriangleClassification& c);

/// Geometry of Delta(m, n, p) from 1/m + 1/n + 1/p against 1.
Geometry triangle_geometry(long m, long n, long p);

/// The primitive n-th roots zeta_n^j, j coprime to n, with their j.
std::vector<std::pair<long, CyclotomicNumber>> primitive_roots(long n);

/// A^k, B^k, (AB)^k scalar; order(q) = 2k.
Claim verify_even(long k, const CyclotomicNumber& q);
/// The five odd-case relations scalar; order(q) = 2k + 1.
Claim verify_odd(long k, const CyclotomicNumber& q);
/// With alpha = A^(k+1), v = A^k B^k A^k, u = A^-1 B^k A^k: alpha^(2k+1),
/// u^3, v^2, alpha u v scalar, alpha^2 = A and u^2 alpha^2 u = v alpha^2 v = B.
Claim verify_embedding_lemma(long k, const CyclotomicNumber& q);
/// The listed normal generators of the kernel are scalar; order(q) = n, n
/// not in {1, 6}. n = 2 is reported as flagged.
Claim verify_kernel_generators(long n, const CyclotomicNumber& q);

/// Each check over every primitive root of the relevant order, merged into
/// one claim whose witnesses are grouped by root index.
Claim verify_even_orbit(long k);
Claim verify_odd_orbit(long k);
Claim verify_embedding_orbit(long k);
Claim verify_kernel_orbit(long n);

/// (orbifold chi of Delta(2,3,n), chi of K(2,3,n)); n >= 7.
std::pair<mpq_class, mpq_class> euler_characteristic(long n);
/// |PSL(2, Z/n)| (n - 6) / (6n); n odd, n >= 7.
mpq_class f_of_n(long n);
/// (n + 1)(n - 1)(n - 6) / 12, the value of f at a prime n.
mpq_class f_prime_closed_form(long n);

/// (ab)^r a^-r b^-r against [a,b][b,a^2][a^2,b^2]...[b^(r-1),a^r][a^r,b^r] in
/// Z/r * Z/r, and the same string written as c11 c21^-1 c22 ... crr with
/// cij = [a^i, b^j].
Claim verify_one_relator(long r);

}  // namespace burau_forge
