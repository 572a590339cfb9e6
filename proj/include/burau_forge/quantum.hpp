#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "burau_forge/cyclotomic.hpp"
#include "burau_forge/report.hpp"
#include "burau_forge/triangle.hpp"

namespace burau_forge {

/// Root-of-unity data attached to the level p quantum representation.
struct QuantumParams {
  long p = 0;
  CyclotomicNumber A;                 // A_p
  std::vector<long> colors;           // admissible colors
  std::vector<CyclotomicNumber> mu;   // Dehn twist eigenvalue for each color
  std::optional<CyclotomicNumber> q;  // q_p, defined for p >= 5
  std::optional<mpq_class> o;         // o(p), defined for p >= 5
};

/// Throws DomainError for p < 3 or p = 2 (mod 4).
QuantumParams build_params(long p);
Json to_json(const QuantumParams& qp);

/// o(p) from the residue of p mod 16; p >= 5.
mpq_class o_of_p(long p);

/// lcm over the colors of the order of mu_l / mu_0.
long twist_projective_order(long p);

/// classify(q_p), checked against the prediction from o(p): Delta(o, o, o)
/// when o is an integer and Delta(2, 3, 2o) otherwise. Throws Error on a
/// mismatch and DomainError for p < 5.
TriangleClassification gamma_at_p(long p);

/// order(A_p) is p for even p and 2p for odd p; order(q_p) = 2 o(p).
Claim verify_quantum_orders(long p);
/// twist_projective_order(p) = p; a mismatch is flagged, not failed.
Claim verify_twist_order(long p);
/// gamma_at_p as a claim.
Claim verify_gamma_at_p(long p);

}  // namespace burau_forge
