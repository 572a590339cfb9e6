#include <doctest.h>

#include "burau_forge/error.hpp"
#include "support.hpp"

using namespace burau_forge;

namespace {

/// Stack reduction on signed letters; in Z/r * Z/r a letter power is kept
/// as an exponent in 1..r-1. Independent of reduce_syllables.
std::vector<std::pair<int, long>> oracle_reduce(const std::vector<std::pair<int, long>>& raw, long r) {
  std::vector<std::pair<int, long>> st;
  for (auto [g, e] : raw) {
    if (!st.empty() && st.back().first == g) {
      e += st.back().second;
      st.pop_back();
    }
    if (r > 0) e = ((e % r) + r) % r;
    if (e != 0) st.emplace_back(g, e);
  }
  return st;
}

std::vector<std::pair<int, long>> as_pairs(const GroupWord& w) {
  std::vector<std::pair<int, long>> out;
  for (const auto& s : w.syllables()) out.emplace_back(s.gen, s.exp);
  return out;
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("parsing") {
    const auto ab = ab_alphabet();
    const auto f = GroupContext::free();
    CHECK(GroupWord::parse("a^3 b^-1 a^0 b", ab, f).to_string() == "a^3");
    CHECK(GroupWord::parse("[a,b]", ab, f) == GroupWord::parse("a b a^-1 b^-1", ab, f));
    CHECK(GroupWord::parse("(a b)^2", ab, f).to_string() == "a b a b");
    CHECK(GroupWord::parse("(a b)^-1", ab, f).to_string() == "b^-1 a^-1");
    CHECK(GroupWord::parse("1", ab, f).empty());
    CHECK(GroupWord::parse("", ab, f).empty());
    CHECK(GroupWord::parse("a*b", ab, f).length() == 2);
    CHECK(GroupWord::parse("[[a,b],a]", ab, f).length() == 10);
    CHECK_THROWS_AS(GroupWord::parse("c", ab, f), ParseError);
    CHECK_THROWS_AS(GroupWord::parse("a^", ab, f), ParseError);
    CHECK_THROWS_AS(GroupWord::parse("(a", ab, f), ParseError);
    CHECK_THROWS_AS(GroupWord::parse("[a b]", ab, f), ParseError);
    const auto b3 = braid_alphabet(3);
    CHECK(GroupWord::parse("g1 g2^-1 g1", b3, GroupContext::braid(3)).length() == 3);
  }

  TEST_CASE("reduction matches a stack oracle") {
    std::mt19937 rng(17);
    const auto ab = ab_alphabet();
    for (long r : {0L, 2L, 3L, 5L, 7L}) {
      const GroupContext ctx = r == 0 ? GroupContext::free() : GroupContext::free_product(r);
      for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(0, 12), gen(0, 1), ex(-4, 4);
        std::vector<Syllable> raw;
        std::vector<std::pair<int, long>> pairs;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
          const int g = gen(rng);
          const long e = ex(rng);
          raw.push_back({g, e});
          pairs.emplace_back(g, e);
        }
        const GroupWord w(ab, ctx, raw);
        CHECK(as_pairs(w) == oracle_reduce(pairs, r));
        CHECK(reduce_syllables(ctx, w.syllables()) == w.syllables());
      }
    }
  }

  TEST_CASE("group laws") {
    std::mt19937 rng(19);
    const auto ab = ab_alphabet();
    for (long r : {0L, 3L, 4L}) {
      const GroupContext ctx = r == 0 ? GroupContext::free() : GroupContext::free_product(r);
      for (int trial = 0; trial < 100; ++trial) {
        const auto u = test_support::random_word(rng, ab, ctx, 5, 3);
        const auto v = test_support::random_word(rng, ab, ctx, 5, 3);
        const auto w = test_support::random_word(rng, ab, ctx, 5, 3);
        CHECK((u * v) * w == u * (v * w));
        CHECK((u * u.inverse()).empty());
        CHECK((u * v).inverse() == v.inverse() * u.inverse());
        CHECK(commutator(u, v) == u * v * u.inverse() * v.inverse());
        CHECK(u.pow(3) == u * u * u);
        CHECK(u.pow(-2) == u.inverse() * u.inverse());
      }
    }
  }

  TEST_CASE("free product torsion") {
    const auto ab = ab_alphabet();
    const auto ctx = GroupContext::free_product(3);
    const auto a = GroupWord::generator(ab, ctx, 0);
    CHECK(a.pow(3).empty());
    CHECK(a.pow(-1) == a.pow(2));
    CHECK(GroupWord::parse("a^4 b^5", ab, ctx).to_string() == "a b^2");
  }

  TEST_CASE("context mismatch is rejected") {
    const auto a = GroupWord::generator(ab_alphabet(), GroupContext::free(), 0);
    const auto b = GroupWord::generator(ab_alphabet(), GroupContext::free_product(2), 1);
    CHECK_THROWS_AS(commutator(a, b), DomainError);
    CHECK_THROWS_AS(a * b, DomainError);
  }

  TEST_CASE("iterated brackets and substitution") {
    const auto ab = ab_alphabet();
    const auto f = GroupContext::free();
    const auto a = GroupWord::generator(ab, f, 0);
    const auto b = GroupWord::generator(ab, f, 1);
    CHECK(iterated_bracket(a, b, 2) == commutator(a, b));
    CHECK(iterated_bracket(a, b, 3) == commutator(a, commutator(a, b)));
    CHECK_THROWS_AS(iterated_bracket(a, b, 1), DomainError);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
      const auto u = test_support::random_word(rng, ab, f, 4, 2);
      const auto v = test_support::random_word(rng, ab, f, 4, 2);
      const std::vector<GroupWord> images{test_support::random_word(rng, ab, f, 3, 2), test_support::random_word(rng, ab, f, 3, 2)};
      CHECK(substitute(u * v, images) == substitute(u, images) * substitute(v, images));
    }
  }

  TEST_CASE("s and t words") {
    for (long k = 3; k <= 15; ++k) {
      const auto [s, t] = st_words(k);
      CHECK(s.exponent_sum(0) == 5 * k - 2 * k * k);
      CHECK(s.exponent_sum(1) == 2 * k - 2);
      CHECK(t.exponent_sum(0) == 9 * k + 1);
      CHECK(t.exponent_sum(1) == 2 * k);
    }
    CHECK(st_words(3).first.to_string() == "a^3 b^3 a^-6 b^-1 a^3 b^-1 a^-6 b^3 a^3");
  }
}
