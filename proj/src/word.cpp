#include "burau_forge/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "burau_forge/error.hpp"

namespace burau_forge {

Alphabet make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet braid_alphabet(long strands) {
  if (strands < 2) throw DomainError("braid groups need at least two strands");
  std::vector<std::string> names;
  for (long i = 1; i < strands; ++i) names.push_back("g" + std::to_string(i));
  return make_alphabet(std::move(names));
}

Alphabet ab_alphabet() {
  static const Alphabet ab = make_alphabet({"a", "b"});
  return ab;
}

std::vector<Syllable> reduce_syllables(const GroupContext& ctx, std::vector<Syllable> raw) {
  const bool torsion = ctx.kind == GroupKind::FreeProduct;
  const long r = ctx.param;
  auto normalize = [&](long e) {
    if (!torsion) return e;
    e %= r;
    return e < 0 ? e + r : e;
  };
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (auto s : raw) {
    s.exp = normalize(s.exp);
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      s.exp = normalize(s.exp + out.back().exp);
      out.pop_back();
      if (s.exp == 0) continue;
    }
    out.push_back(s);
  }
  return out;
}

GroupWord::GroupWord(Alphabet alphabet, GroupContext ctx, std::vector<Syllable> syllables)
    : alphabet_(std::move(alphabet)), ctx_(ctx) {
  if (!alphabet_) throw DomainError("word needs an alphabet");
  if (ctx_.kind == GroupKind::FreeProduct && ctx_.param < 2) throw DomainError("free product factors need order >= 2");
  if (ctx_.kind == GroupKind::Braid && static_cast<long>(alphabet_->size()) != ctx_.param - 1) {
    throw DomainError("braid alphabet size must be strands - 1");
  }
  const int n = static_cast<int>(alphabet_->size());
  for (const auto& s : syllables) {
    if (s.gen < 0 || s.gen >= n) throw DomainError("generator index out of range");
  }
  syllables_ = reduce_syllables(ctx_, std::move(syllables));
}

GroupWord GroupWord::generator(Alphabet alphabet, GroupContext ctx, int gen, long exp) {
  return GroupWord(std::move(alphabet), ctx, {{gen, exp}});
}

GroupWord GroupWord::with_syllables(std::vector<Syllable> syllables) const {
  return GroupWord(alphabet_, ctx_, std::move(syllables));
}

long GroupWord::length() const {
  long n = 0;
  for (const auto& s : syllables_) n += std::labs(s.exp);
  return n;
}

long GroupWord::exponent_sum(int gen) const {
  long n = 0;
  for (const auto& s : syllables_) {
    if (s.gen == gen) n += s.exp;
  }
  return n;
}

GroupWord GroupWord::inverse() const {
  std::vector<Syllable> inv(syllables_.rbegin(), syllables_.rend());
  for (auto& s : inv) s.exp = -s.exp;
  return with_syllables(std::move(inv));
}

GroupWord GroupWord::pow(long e) const {
  const GroupWord base = e < 0 ? inverse() : *this;
  std::vector<Syllable> raw;
  raw.reserve(base.syllables_.size() * static_cast<std::size_t>(std::labs(e)));
  for (long i = 0; i < std::labs(e); ++i) raw.insert(raw.end(), base.syllables_.begin(), base.syllables_.end());
  return with_syllables(std::move(raw));
}

bool same_group(const GroupWord& a, const GroupWord& b) {
  return a.context() == b.context() &&
         (a.alphabet() == b.alphabet() || *a.alphabet() == *b.alphabet());
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  if (!same_group(a, b)) throw DomainError("words from different groups");
  std::vector<Syllable> raw = a.syllables_;
  raw.insert(raw.end(), b.syllables_.begin(), b.syllables_.end());
  return a.with_syllables(std::move(raw));
}

bool operator==(const GroupWord& a, const GroupWord& b) {
  return same_group(a, b) && a.syllables_ == b.syllables_;
}

std::string GroupWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::string s;
  for (const auto& syl : syllables_) {
    if (!s.empty()) s += ' ';
    s += (*alphabet_)[static_cast<std::size_t>(syl.gen)];
    if (syl.exp != 1) s += "^" + std::to_string(syl.exp);
  }
  return s;
}

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, Alphabet alphabet, GroupContext ctx)
      : text_(text), alphabet_(std::move(alphabet)), ctx_(ctx) {}

  GroupWord parse() {
    GroupWord w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in word '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  GroupWord identity() const { return GroupWord(alphabet_, ctx_); }

  GroupWord sequence() {
    GroupWord w = identity();
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || at(']') || at(')') || at(',')) return w;
      w = w * factor();
    }
  }

  long exponent() {
    if (!at('^')) return 1;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits = text_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("missing exponent");
    return std::stol(digits);
  }

  GroupWord factor() {
    GroupWord base = identity();
    if (at('[')) {
      ++pos_;
      GroupWord u = sequence();
      if (!at(',')) fail("expected ','");
      ++pos_;
      GroupWord v = sequence();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      base = commutator(u, v);
    } else if (at('(')) {
      ++pos_;
      base = sequence();
      if (!at(')')) fail("expected ')'");
      ++pos_;
    } else if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (start == pos_) fail("expected a generator");
      const std::string name = text_.substr(start, pos_ - start);
      const auto it = std::find(alphabet_->begin(), alphabet_->end(), name);
      if (it == alphabet_->end()) fail("unknown generator '" + name + "'");
      base = GroupWord::generator(alphabet_, ctx_, static_cast<int>(it - alphabet_->begin()));
    }
    return base.pow(exponent());
  }

  const std::string& text_;
  Alphabet alphabet_;
  GroupContext ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord GroupWord::parse(const std::string& text, Alphabet alphabet, GroupContext ctx) {
  return WordParser(text, std::move(alphabet), ctx).parse();
}

std::vector<int> signed_letters(const GroupWord& w) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const auto& s : w.syllables()) {
    const int letter = s.exp > 0 ? s.gen + 1 : -(s.gen + 1);
    for (long i = 0; i < std::labs(s.exp); ++i) out.push_back(letter);
  }
  return out;
}

GroupWord reduce(const GroupWord& w) { return w.with_syllables(w.syllables()); }

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
  if (!same_group(u, v)) throw DomainError("commutator of words from different groups");
  return u * v * u.inverse() * v.inverse();
}

GroupWord iterated_bracket(const GroupWord& x, const GroupWord& y, int k) {
  if (k < 2) throw DomainError("iterated bracket needs length k >= 2");
  GroupWord r = commutator(x, y);
  for (int i = 2; i < k; ++i) r = commutator(x, r);
  return r;
}

GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images) {
  if (images.size() != w.alphabet()->size()) throw DomainError("one image per generator required");
  if (images.empty()) throw DomainError("substitution needs at least one image");
  std::vector<GroupWord> inverses;
  inverses.reserve(images.size());
  for (const auto& im : images) {
    if (!same_group(im, images.front())) throw DomainError("images must share one group");
    inverses.push_back(im.inverse());
  }
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    const auto& piece = s.exp > 0 ? images[static_cast<std::size_t>(s.gen)] : inverses[static_cast<std::size_t>(s.gen)];
    for (long i = 0; i < std::labs(s.exp); ++i) raw.insert(raw.end(), piece.syllables().begin(), piece.syllables().end());
  }
  return images.front().with_syllables(std::move(raw));
}

std::pair<GroupWord, GroupWord> st_words(long k) {
  if (k < 1) throw DomainError("st_words needs k >= 1");
  const long k2 = k * k;
  constexpr int a = 0, b = 1;
  const std::vector<Syllable> s{{a, k}, {b, k}, {a, k - k2}, {b, -1}, {a, k}, {b, -1}, {a, k - k2}, {b, k}, {a, k}};
  const std::vector<Syllable> t{{a, k}, {b, k}, {a, k - k2}, {b, -1}, {a, k + 1}, {b, 1}, {a, k + k2}, {b, k}, {a, 5 * k}};
  return {GroupWord(ab_alphabet(), GroupContext::free(), s), GroupWord(ab_alphabet(), GroupContext::free(), t)};
}

}  // namespace burau_forge
