#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "burau_forge/magnus.hpp"
#include "burau_forge/word.hpp"

namespace burau_forge {

/// Free group F_3 on x1, x2, x3.
Alphabet free3_alphabet();
/// Free group F_6 on y1, z1, y2, z2, y3, z3.
Alphabet free6_alphabet();

/// Automorphism of a free group given by generator images, with the images
/// of the inverse automorphism stored alongside.
class FreeAutomorphism {
 public:
  FreeAutomorphism(std::vector<GroupWord> images, std::vector<GroupWord> inverse_images);
  static FreeAutomorphism identity(const Alphabet& alphabet);

  const std::vector<GroupWord>& images() const { return images_; }
  const std::vector<GroupWord>& inverse_images() const { return inverse_images_; }

  GroupWord apply(const GroupWord& w) const { return substitute(w, images_); }
  /// this o inner, i.e. x -> this(inner(x)).
  FreeAutomorphism compose(const FreeAutomorphism& inner) const;
  FreeAutomorphism inverse() const { return FreeAutomorphism(inverse_images_, images_); }
  /// Both compositions with the stored inverse reduce to the identity.
  bool verify_inverse() const;

  friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) { return a.images_ == b.images_; }

 private:
  std::vector<GroupWord> images_;
  std::vector<GroupWord> inverse_images_;
};

/// g_i : x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, other generators fixed;
/// A(uv) = A(u) o A(v). The word must be a braid word on 3 strands.
FreeAutomorphism artin_action(const GroupWord& braid);

/// For a word equal to c^-1 x_j c, the generator j and the reduced c.
std::optional<std::pair<int, GroupWord>> split_conjugate(const GroupWord& w);

/// Every x_j is sent to a conjugate of itself.
bool is_pure(const FreeAutomorphism& a);

/// The l with A(braid)(x_i) = l^-1 x_i l and zero total x_i-exponent;
/// strand is 1-based. Throws DomainError for a non-pure braid.
GroupWord longitude(const GroupWord& braid, int strand);

/// Magnus expansion of longitude(braid, strand) truncated at `degree`,
/// computed without forming the longitude word: l_i(u g) = l_{s(i)}(u) A(u)(l_i(g))
/// for the permutation s of g, carried through the substitution x_j -> M(A(u)(x_j)).
MagnusSeries longitude_magnus(const GroupWord& braid, int strand, int degree);

/// x_i -> [y_i, z_i].
GroupWord eta_embed(const GroupWord& w);

/// Word over {a, b} read in B_3 through a -> g1^2, b -> g2^2.
GroupWord ab_to_braid(const GroupWord& w);

}  // namespace burau_forge
