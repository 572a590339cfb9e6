#include "burau_forge/magnus.hpp"

#include <cstdint>
#include <string>

#include "burau_forge/error.hpp"

namespace burau_forge {

namespace {

using Coeff = MagnusSeries::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Magnus coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Magnus coefficient overflow");
  return r;
}

std::size_t ipow(std::size_t r, int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= r;
  return p;
}

/// Index of gen repeated j times.
std::size_t repeated_index(std::size_t r, int gen, int j) {
  std::size_t idx = 0;
  for (int t = 0; t < j; ++t) idx = idx * r + static_cast<std::size_t>(gen);
  return idx;
}

/// Generalized binomial coefficients C(e, j) for j = 0..d.
std::vector<Coeff> binomials(long e, int d) {
  std::vector<Coeff> c(static_cast<std::size_t>(d) + 1);
  c[0] = 1;
  for (int j = 1; j <= d; ++j) c[static_cast<std::size_t>(j)] = checked_mul(c[static_cast<std::size_t>(j) - 1], e - j + 1) / j;
  return c;
}

std::string coeff_to_string(Coeff c) {
  if (c == 0) return "0";
  const bool neg = c < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(c + 1)) + 1 : static_cast<unsigned __int128>(c);
  std::string s;
  while (u > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace

MagnusSeries::MagnusSeries(int rank, int degree) : rank_(rank), degree_(degree) {
  if (rank < 1) throw DomainError("Magnus series need rank >= 1");
  if (degree < 0) throw DomainError("truncation degree must be nonnegative");
  for (int n = 0; n <= degree; ++n) blocks_.emplace_back(ipow(static_cast<std::size_t>(rank), n), 0);
}

MagnusSeries MagnusSeries::one(int rank, int degree) {
  MagnusSeries s(rank, degree);
  s.blocks_[0][0] = 1;
  return s;
}

Coeff MagnusSeries::coeff(const std::vector<int>& monomial) const {
  if (static_cast<int>(monomial.size()) > degree_) throw DomainError("monomial exceeds the truncation degree");
  std::size_t idx = 0;
  for (int g : monomial) {
    if (g < 0 || g >= rank_) throw DomainError("letter out of range");
    idx = idx * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(g);
  }
  return blocks_[monomial.size()][idx];
}

void MagnusSeries::set_coeff(const std::vector<int>& monomial, Coeff c) {
  if (static_cast<int>(monomial.size()) > degree_) throw DomainError("monomial exceeds the truncation degree");
  std::size_t idx = 0;
  for (int g : monomial) {
    if (g < 0 || g >= rank_) throw DomainError("letter out of range");
    idx = idx * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(g);
  }
  blocks_[monomial.size()][idx] = c;
}

MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.rank_ != b.rank_ || a.degree_ != b.degree_) throw DomainError("Magnus series shape mismatch");
  MagnusSeries out(a.rank_, a.degree_);
  const std::size_t r = static_cast<std::size_t>(a.rank_);
  for (int i = 0; i <= a.degree_; ++i) {
    const auto& ab = a.blocks_[static_cast<std::size_t>(i)];
    for (int j = 0; i + j <= a.degree_; ++j) {
      const auto& bb = b.blocks_[static_cast<std::size_t>(j)];
      auto& ob = out.blocks_[static_cast<std::size_t>(i + j)];
      const std::size_t scale = ipow(r, j);
      for (std::size_t x = 0; x < ab.size(); ++x) {
        if (ab[x] == 0) continue;
        const std::size_t base = x * scale;
        for (std::size_t y = 0; y < bb.size(); ++y) {
          if (bb[y] != 0) ob[base + y] = checked_add(ob[base + y], checked_mul(ab[x], bb[y]));
        }
      }
    }
  }
  return out;
}

MagnusSeries operator+(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.rank_ != b.rank_ || a.degree_ != b.degree_) throw DomainError("Magnus series shape mismatch");
  MagnusSeries out = a;
  for (std::size_t n = 0; n < out.blocks_.size(); ++n) {
    for (std::size_t x = 0; x < out.blocks_[n].size(); ++x) out.blocks_[n][x] = checked_add(out.blocks_[n][x], b.blocks_[n][x]);
  }
  return out;
}

MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b) {
  MagnusSeries neg = b;
  for (auto& blk : neg.blocks_) {
    for (auto& c : blk) c = checked_mul(c, -1);
  }
  return a + neg;
}

bool operator==(const MagnusSeries& a, const MagnusSeries& b) {
  return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.blocks_ == b.blocks_;
}

MagnusSeries MagnusSeries::times_power(int gen, long e) const {
  if (gen < 0 || gen >= rank_) throw DomainError("letter out of range");
  const auto c = binomials(e, degree_);
  const std::size_t r = static_cast<std::size_t>(rank_);
  MagnusSeries out(rank_, degree_);
  for (int n = 0; n <= degree_; ++n) {
    const auto& src = blocks_[static_cast<std::size_t>(n)];
    for (int j = 0; n + j <= degree_; ++j) {
      const Coeff cj = c[static_cast<std::size_t>(j)];
      if (cj == 0) continue;
      const std::size_t scale = ipow(r, j);
      const std::size_t suffix = repeated_index(r, gen, j);
      auto& dst = out.blocks_[static_cast<std::size_t>(n + j)];
      for (std::size_t x = 0; x < src.size(); ++x) {
        if (src[x] != 0) dst[x * scale + suffix] = checked_add(dst[x * scale + suffix], checked_mul(src[x], cj));
      }
    }
  }
  return out;
}

MagnusSeries MagnusSeries::power_times(int gen, long e) const {
  if (gen < 0 || gen >= rank_) throw DomainError("letter out of range");
  const auto c = binomials(e, degree_);
  const std::size_t r = static_cast<std::size_t>(rank_);
  MagnusSeries out(rank_, degree_);
  for (int n = 0; n <= degree_; ++n) {
    const auto& src = blocks_[static_cast<std::size_t>(n)];
    const std::size_t width = src.size();
    for (int j = 0; n + j <= degree_; ++j) {
      const Coeff cj = c[static_cast<std::size_t>(j)];
      if (cj == 0) continue;
      const std::size_t prefix = repeated_index(r, gen, j) * width;
      auto& dst = out.blocks_[static_cast<std::size_t>(n + j)];
      for (std::size_t x = 0; x < width; ++x) {
        if (src[x] != 0) dst[prefix + x] = checked_add(dst[prefix + x], checked_mul(src[x], cj));
      }
    }
  }
  return out;
}

std::optional<int> MagnusSeries::lowest_nonconstant_degree() const {
  for (int n = 1; n <= degree_; ++n) {
    for (Coeff c : blocks_[static_cast<std::size_t>(n)]) {
      if (c != 0) return n;
    }
  }
  return std::nullopt;
}

Json to_json(const MagnusSeries& s) {
  Json terms = Json::object();
  const std::size_t r = static_cast<std::size_t>(s.rank());
  for (int n = 0; n <= s.degree(); ++n) {
    const auto& blk = s.block(n);
    for (std::size_t x = 0; x < blk.size(); ++x) {
      if (blk[x] == 0) continue;
      std::vector<int> letters(static_cast<std::size_t>(n));
      std::size_t v = x;
      for (int t = n - 1; t >= 0; --t) {
        letters[static_cast<std::size_t>(t)] = static_cast<int>(v % r);
        v /= r;
      }
      std::string key;
      for (int g : letters) key += (key.empty() ? "X" : " X") + std::to_string(g + 1);
      if (key.empty()) key = "1";
      const Coeff c = blk[x];
      if (c >= INT64_MIN && c <= INT64_MAX) {
        terms[key] = static_cast<long long>(c);
      } else {
        terms[key] = coeff_to_string(c);
      }
    }
  }
  return Json{{"degree", s.degree()}, {"terms", std::move(terms)}};
}

MagnusSeries magnus_expansion(const GroupWord& w, int degree) {
  if (degree < 1) throw DomainError("Magnus degree must be >= 1");
  if (w.context().kind != GroupKind::Free) throw DomainError("Magnus expansion needs a free-group word");
  MagnusSeries s = MagnusSeries::one(static_cast<int>(w.alphabet()->size()), degree);
  for (const auto& syl : w.syllables()) s = s.times_power(syl.gen, syl.exp);
  return s;
}

std::optional<int> series_depth(const MagnusSeries& s) { return s.lowest_nonconstant_degree(); }

std::optional<int> magnus_depth(const GroupWord& w, int dmax) {
  if (dmax < 1) throw DomainError("dmax must be >= 1");
  return series_depth(magnus_expansion(w, dmax));
}

}  // namespace burau_forge
