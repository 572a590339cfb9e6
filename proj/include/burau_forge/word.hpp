#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace burau_forge {

enum class GroupKind { Free, FreeProduct, Braid };

/// Which group a word lives in. `param` is the torsion order r of each
/// factor for Z/r * Z/r and the strand count n for B_n; unused for free groups.
struct GroupContext {
  GroupKind kind = GroupKind::Free;
  long param = 0;

  static GroupContext free() { return {GroupKind::Free, 0}; }
  static GroupContext free_product(long r) { return {GroupKind::FreeProduct, r}; }
  static GroupContext braid(long n) { return {GroupKind::Braid, n}; }
  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

struct Syllable {
  int gen = 0;
  long exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Alphabet = std::shared_ptr<const std::vector<std::string>>;

Alphabet make_alphabet(std::vector<std::string> names);
Alphabet braid_alphabet(long strands);  // g1 .. g{n-1}

/// Free reduction of a syllable list: adjacent syllables on the same generator
/// merge, zero exponents vanish, and in Z/r * Z/r exponents are taken into
/// 1..r-1. Merging cascades, so the output is reduced and the map idempotent.
std::vector<Syllable> reduce_syllables(const GroupContext& ctx, std::vector<Syllable> raw);

/// Reduced word over a named alphabet in one of the supported groups.
///
/// Braid words receive free reduction only; equality of braid words here is
/// equality as reduced words, not equality in B_n.
class GroupWord {
 public:
  GroupWord(Alphabet alphabet, GroupContext ctx, std::vector<Syllable> syllables = {});

  static GroupWord generator(Alphabet alphabet, GroupContext ctx, int gen, long exp = 1);
  /// Parses "a^3 b^-1 [a,b] (a b)^2"; "1" or an empty string is the identity.
  static GroupWord parse(const std::string& text, Alphabet alphabet, GroupContext ctx);

  const Alphabet& alphabet() const { return alphabet_; }
  const GroupContext& context() const { return ctx_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Number of letters, sum of |exponent|.
  long length() const;
  /// Exponent sum of one generator.
  long exponent_sum(int gen) const;

  GroupWord inverse() const;
  GroupWord pow(long e) const;
  /// The word with identical alphabet and context but other syllables.
  GroupWord with_syllables(std::vector<Syllable> syllables) const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord& a, const GroupWord& b);

  std::string to_string() const;

 private:
  Alphabet alphabet_;
  GroupContext ctx_;
  std::vector<Syllable> syllables_;
};

bool same_group(const GroupWord& a, const GroupWord& b);

/// Same word with every syllable expanded to exponent +-1.
std::vector<int> signed_letters(const GroupWord& w);  // gen+1 or -(gen+1)

GroupWord reduce(const GroupWord& w);

/// [u, v] = u v u^-1 v^-1. Throws DomainError on a context mismatch.
GroupWord commutator(const GroupWord& u, const GroupWord& v);

/// [x, [x, ..., [x, y]...]] with k - 1 brackets; k >= 2.
GroupWord iterated_bracket(const GroupWord& x, const GroupWord& y, int k);

/// Homomorphic image: generator g goes to images[g].
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images);

/// The words s(k), t(k) over {a, b} with a = g1^2 and b = g2^2:
///   s = a^k b^k a^(k-k^2) b^-1 a^k b^-1 a^(k-k^2) b^k a^k
///   t = a^k b^k a^(k-k^2) b^-1 a^(k+1) b a^(k+k^2) b^k a^(5k)
std::pair<GroupWord, GroupWord> st_words(long k);

/// Free group on {a, b}, the alphabet of st_words.
Alphabet ab_alphabet();

}  // namespace burau_forge
