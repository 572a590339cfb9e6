#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "burau_forge/burau.hpp"
#include "burau_forge/report.hpp"

namespace burau_forge {

enum class Signature { Definite, Indefinite, Degenerate };
std::string to_string(Signature s);

/// Hermitian J (J^dagger = J under zeta -> zeta^-1) with A^dagger J A = J and
/// B^dagger J B = J, verified exactly. The signature refers to the embedding.
struct HermitianForm2 {
  ProjMatrix2 J;
  long embedding = 1;
  Signature signature = Signature::Definite;
};

/// Solves the invariance equations for the generators at q and classifies
/// the form under zeta_M -> exp(2 pi i j / M), M the conductor of q. nullopt
/// when every invariant Hermitian form is degenerate.
std::optional<HermitianForm2> invariant_form(const CyclotomicNumber& q, long embedding);

/// M^dagger J M = J exactly.
bool preserves_form(const ProjMatrix2& J, const ProjMatrix2& M);

/// Embedding indices, increasing, with an indefinite invariant form.
std::vector<long> indefinite_embeddings(const CyclotomicNumber& q);

/// Alphabet {x, y} of words in a generator pair.
Alphabet xy_alphabet();

struct RelationSearch {
  std::optional<GroupWord> witness;  // nonempty reduced word over {x, y}
  long words_enumerated = 0;
};

/// Exact search for a nonempty reduced word of length <= max_len in x, y
/// that is projectively trivial. Words of length <= ceil(max_len / 2) are
/// enumerated in the order x, x^-1, y, y^-1 and bucketed by projective normal
/// form; two words u, v in one bucket give the relation v u^-1. Complete:
/// nullopt means no such relation exists.
RelationSearch short_relation_oracle(const ProjMatrix2& x, const ProjMatrix2& y, int max_len);

/// Arc of the unit circle from `start` counterclockwise to `end`, endpoints
/// exact rational points on the circle.
struct Arc {
  std::array<mpq_class, 2> start, end;
};

struct PingPongCertificate {
  CyclotomicNumber q;
  long embedding = 1;
  std::string x, y;  // words over {A, B}
  long a = 1, b = 1;
  unsigned precision = 128;
  ProjMatrix2 form;
  /// Attracting and repelling arcs of x^a, then of y^b.
  std::array<Arc, 4> arcs;
  mpq_class margin;
};

Json to_json(const PingPongCertificate& c);
/// Throws ParseError.
PingPongCertificate certificate_from_json(const Json& j);

struct PingPongConfig {
  long max_power = 4;
  unsigned precision = 128;
  unsigned max_precision = 2048;
};

enum class SearchOutcome { Found, NotFound, PrecisionExhausted };

struct PingPongResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::optional<PingPongCertificate> certificate;
  std::string detail;
};

/// Searches powers a, b <= max_power and arc half-widths for a ping-pong
/// configuration of x^a, y^b on the boundary of the disk model at the given
/// embedding. Throws DomainError when the form there is not indefinite or
/// x or y has finite projective order.
PingPongResult ping_pong_certify(const CyclotomicNumber& q, long embedding, const GroupWord& x, const GroupWord& y,
                                 const PingPongConfig& config);

/// Recomputes the disk model from q and the embedding at twice the
/// certificate precision and rechecks every inclusion and disjointness
/// condition. Never throws on malformed content; returns false instead.
bool verify_certificate(const PingPongCertificate& c);

}  // namespace burau_forge
