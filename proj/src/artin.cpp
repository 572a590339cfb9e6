#include "burau_forge/artin.hpp"

#include <array>
#include <cstdlib>

#include "burau_forge/error.hpp"

namespace burau_forge {

namespace {

GroupWord x_gen(int j, long e = 1) { return GroupWord::generator(free3_alphabet(), GroupContext::free(), j, e); }

/// A(g_i) for sign > 0, A(g_i^-1) otherwise; i is 0-based.
FreeAutomorphism artin_letter(int i, int sign) {
  std::vector<GroupWord> fwd{x_gen(0), x_gen(1), x_gen(2)};
  std::vector<GroupWord> inv = fwd;
  fwd[static_cast<std::size_t>(i)] = x_gen(i) * x_gen(i + 1) * x_gen(i, -1);
  fwd[static_cast<std::size_t>(i) + 1] = x_gen(i);
  inv[static_cast<std::size_t>(i)] = x_gen(i + 1);
  inv[static_cast<std::size_t>(i) + 1] = x_gen(i + 1, -1) * x_gen(i) * x_gen(i + 1);
  if (sign > 0) return FreeAutomorphism(std::move(fwd), std::move(inv));
  return FreeAutomorphism(std::move(inv), std::move(fwd));
}

void require_b3(const GroupWord& braid) {
  if (braid.context() != GroupContext::braid(3)) throw DomainError("expected a braid word on 3 strands");
}

MagnusSeries eval_series(const GroupWord& w, const std::vector<MagnusSeries>& p, const std::vector<MagnusSeries>& pinv,
                         const MagnusSeries& one) {
  MagnusSeries out = one;
  for (const auto& s : w.syllables()) {
    const auto& f = s.exp > 0 ? p[static_cast<std::size_t>(s.gen)] : pinv[static_cast<std::size_t>(s.gen)];
    for (long t = 0; t < std::labs(s.exp); ++t) out = out * f;
  }
  return out;
}

}  // namespace

Alphabet free3_alphabet() {
  static const Alphabet a = make_alphabet({"x1", "x2", "x3"});
  return a;
}

Alphabet free6_alphabet() {
  static const Alphabet a = make_alphabet({"y1", "z1", "y2", "z2", "y3", "z3"});
  return a;
}

FreeAutomorphism::FreeAutomorphism(std::vector<GroupWord> images, std::vector<GroupWord> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  if (images_.empty() || images_.size() != inverse_images_.size()) throw DomainError("automorphism image lists must match");
  for (const auto& w : images_) {
    if (!same_group(w, images_.front()) || w.context().kind != GroupKind::Free) {
      throw DomainError("automorphism images must be words of one free group");
    }
  }
}

FreeAutomorphism FreeAutomorphism::identity(const Alphabet& alphabet) {
  std::vector<GroupWord> gens;
  for (std::size_t j = 0; j < alphabet->size(); ++j) gens.push_back(GroupWord::generator(alphabet, GroupContext::free(), static_cast<int>(j)));
  return FreeAutomorphism(gens, gens);
}

FreeAutomorphism FreeAutomorphism::compose(const FreeAutomorphism& inner) const {
  std::vector<GroupWord> img, inv;
  for (const auto& w : inner.images_) img.push_back(substitute(w, images_));
  for (const auto& w : inverse_images_) inv.push_back(substitute(w, inner.inverse_images_));
  return FreeAutomorphism(std::move(img), std::move(inv));
}

bool FreeAutomorphism::verify_inverse() const {
  const auto id = identity(images_.front().alphabet());
  return compose(inverse()).images_ == id.images_ && inverse().compose(*this).images_ == id.images_;
}

FreeAutomorphism artin_action(const GroupWord& braid) {
  require_b3(braid);
  FreeAutomorphism a = FreeAutomorphism::identity(free3_alphabet());
  for (const auto& s : braid.syllables()) {
    const FreeAutomorphism g = artin_letter(s.gen, s.exp > 0 ? 1 : -1);
    for (long t = 0; t < std::labs(s.exp); ++t) a = a.compose(g);
  }
  return a;
}

std::optional<std::pair<int, GroupWord>> split_conjugate(const GroupWord& w) {
  const auto letters = signed_letters(w);
  if (letters.size() % 2 == 0) return std::nullopt;
  const std::size_t m = letters.size() / 2;
  if (letters[m] < 0) return std::nullopt;
  for (std::size_t t = 0; t < m; ++t) {
    if (letters[m - 1 - t] != -letters[m + 1 + t]) return std::nullopt;
  }
  std::vector<Syllable> tail;
  for (std::size_t t = m + 1; t < letters.size(); ++t) {
    const int l = letters[t];
    tail.push_back({std::abs(l) - 1, l > 0 ? 1 : -1});
  }
  return std::make_pair(letters[m] - 1, w.with_syllables(std::move(tail)));
}

bool is_pure(const FreeAutomorphism& a) {
  for (std::size_t j = 0; j < a.images().size(); ++j) {
    const auto split = split_conjugate(a.images()[j]);
    if (!split || split->first != static_cast<int>(j)) return false;
  }
  return true;
}

GroupWord longitude(const GroupWord& braid, int strand) {
  if (strand < 1 || strand > 3) throw DomainError("strand must be 1, 2 or 3");
  const FreeAutomorphism a = artin_action(braid);
  if (!is_pure(a)) throw DomainError("longitudes need a pure braid");
  const int i = strand - 1;
  const GroupWord l = split_conjugate(a.images()[static_cast<std::size_t>(i)])->second;
  return x_gen(i, -l.exponent_sum(i)) * l;
}

MagnusSeries longitude_magnus(const GroupWord& braid, int strand, int degree) {
  require_b3(braid);
  if (strand < 1 || strand > 3) throw DomainError("strand must be 1, 2 or 3");
  if (degree < 1) throw DomainError("Magnus degree must be >= 1");
  const MagnusSeries one = MagnusSeries::one(3, degree);

  struct LetterData {
    FreeAutomorphism action;
    std::array<int, 3> perm;                // A(g)(x_j) is conjugate to x_perm[j]
    std::vector<GroupWord> conjugators;     // A(g)(x_j) = c_j^-1 x_perm[j] c_j
  };
  auto letter_data = [](int gen, int sign) {
    LetterData d{artin_letter(gen, sign), {}, {}};
    for (int j = 0; j < 3; ++j) {
      const auto split = split_conjugate(d.action.images()[static_cast<std::size_t>(j)]);
      d.perm[static_cast<std::size_t>(j)] = split->first;
      d.conjugators.push_back(split->second);
    }
    return d;
  };
  const std::array<LetterData, 4> table{letter_data(0, 1), letter_data(0, -1), letter_data(1, 1), letter_data(1, -1)};

  std::vector<MagnusSeries> p, pinv, l(3, one);
  for (int j = 0; j < 3; ++j) {
    p.push_back(one.times_power(j, 1));
    pinv.push_back(one.times_power(j, -1));
  }
  std::array<int, 3> perm{0, 1, 2};
  for (const auto& s : braid.syllables()) {
    const LetterData& g = table[static_cast<std::size_t>(2 * s.gen + (s.exp > 0 ? 0 : 1))];
    for (long t = 0; t < std::labs(s.exp); ++t) {
      std::vector<MagnusSeries> nl, np, npinv;
      for (std::size_t j = 0; j < 3; ++j) {
        nl.push_back(l[static_cast<std::size_t>(g.perm[j])] * eval_series(g.conjugators[j], p, pinv, one));
        np.push_back(eval_series(g.action.images()[j], p, pinv, one));
        npinv.push_back(eval_series(g.action.images()[j].inverse(), p, pinv, one));
      }
      std::array<int, 3> nperm{};
      for (std::size_t j = 0; j < 3; ++j) nperm[j] = perm[static_cast<std::size_t>(g.perm[j])];
      l = std::move(nl);
      p = std::move(np);
      pinv = std::move(npinv);
      perm = nperm;
    }
  }
  if (perm != std::array<int, 3>{0, 1, 2}) throw DomainError("longitudes need a pure braid");
  const int i = strand - 1;
  const MagnusSeries& li = l[static_cast<std::size_t>(i)];
  const auto e = li.coeff({i});
  return li.power_times(i, -static_cast<long>(e));
}

GroupWord eta_embed(const GroupWord& w) {
  if (w.context() != GroupContext::free() || *w.alphabet() != *free3_alphabet()) throw DomainError("eta is defined on F_3");
  const auto f6 = free6_alphabet();
  std::vector<GroupWord> images;
  for (int i = 0; i < 3; ++i) {
    images.push_back(commutator(GroupWord::generator(f6, GroupContext::free(), 2 * i),
                                GroupWord::generator(f6, GroupContext::free(), 2 * i + 1)));
  }
  return substitute(w, images);
}

GroupWord ab_to_braid(const GroupWord& w) {
  if (w.alphabet()->size() != 2) throw DomainError("expected a word over {a, b}");
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) raw.push_back({s.gen, 2 * s.exp});
  return GroupWord(braid_alphabet(3), GroupContext::braid(3), std::move(raw));
}

}  // namespace burau_forge
