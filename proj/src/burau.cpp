#include "burau_forge/burau.hpp"

#include <cstdlib>

#include "burau_forge/error.hpp"

namespace burau_forge {

BurauMatrix::BurauMatrix(std::size_t size) : size_(size), entries_(size * size) {}

BurauMatrix BurauMatrix::identity(std::size_t size) {
  BurauMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  if (a.size_ != b.size_) throw DomainError("matrix size mismatch");
  const std::size_t n = a.size_;
  BurauMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const CyclotomicNumber& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

bool operator==(const BurauMatrix& a, const BurauMatrix& b) {
  return a.size_ == b.size_ && a.entries_ == b.entries_;
}

BurauMatrix BurauMatrix::inverse() const {
  const std::size_t n = size_;
  BurauMatrix left = *this;
  BurauMatrix right = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && left.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZero();
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(left.at(col, j), left.at(pivot, j));
      std::swap(right.at(col, j), right.at(pivot, j));
    }
    const CyclotomicNumber inv = left.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      left.at(col, j) *= inv;
      right.at(col, j) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || left.at(r, col).is_zero()) continue;
      const CyclotomicNumber f = left.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        left.at(r, j) -= f * left.at(col, j);
        right.at(r, j) -= f * right.at(col, j);
      }
    }
  }
  return right;
}

bool BurauMatrix::is_scalar() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (i == j ? at(i, i) != at(0, 0) : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

BurauMatrix burau_generator(long n, long j, const CyclotomicNumber& q) {
  if (n < 2) throw DomainError("braid groups need at least two strands");
  if (j < 1 || j > n - 1) throw DomainError("generator index out of range for B_" + std::to_string(n));
  if (q.is_zero()) throw DomainError("Burau parameter must be nonzero");
  const std::size_t size = static_cast<std::size_t>(n - 1);
  BurauMatrix m = BurauMatrix::identity(size);
  const std::size_t r = static_cast<std::size_t>(j - 1);
  // Row j of the matrix (0-based r) carries q, -q, 1 around the diagonal.
  if (r >= 1) m.at(r, r - 1) = q;
  m.at(r, r) = -q;
  if (r + 1 < size) m.at(r, r + 1) = 1;
  return m;
}

BurauMatrix burau_eval(const GroupWord& w, const CyclotomicNumber& q) {
  if (w.context().kind != GroupKind::Braid) throw DomainError("burau_eval needs a braid word");
  const long n = w.context().param;
  const std::size_t size = static_cast<std::size_t>(n - 1);
  std::vector<BurauMatrix> gens, invs;
  for (long j = 1; j < n; ++j) {
    gens.push_back(burau_generator(n, j, q));
    invs.push_back(gens.back().inverse());
  }
  BurauMatrix out = BurauMatrix::identity(size);
  for (const auto& s : w.syllables()) {
    const auto& g = s.exp > 0 ? gens[static_cast<std::size_t>(s.gen)] : invs[static_cast<std::size_t>(s.gen)];
    for (long i = 0; i < std::labs(s.exp); ++i) out = out * g;
  }
  return out;
}

ProjMatrix2::ProjMatrix2() : e_{1, 0, 0, 1} {}

ProjMatrix2::ProjMatrix2(CyclotomicNumber a, CyclotomicNumber b, CyclotomicNumber c, CyclotomicNumber d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (det().is_zero()) throw DomainError("singular 2x2 matrix");
}

ProjMatrix2::ProjMatrix2(Unchecked, CyclotomicNumber a, CyclotomicNumber b, CyclotomicNumber c, CyclotomicNumber d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

ProjMatrix2::ProjMatrix2(const BurauMatrix& m) {
  if (m.size() != 2) throw DomainError("expected a 2x2 matrix");
  e_ = {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
  if (det().is_zero()) throw DomainError("singular 2x2 matrix");
}

ProjMatrix2 operator*(const ProjMatrix2& x, const ProjMatrix2& y) {
  const auto& p = x.e_;
  const auto& r = y.e_;
  return ProjMatrix2(ProjMatrix2::Unchecked{}, p[0] * r[0] + p[1] * r[2], p[0] * r[1] + p[1] * r[3], p[2] * r[0] + p[3] * r[2],
                     p[2] * r[1] + p[3] * r[3]);
}

ProjMatrix2 ProjMatrix2::inverse() const {
  const CyclotomicNumber inv = det().inverse();
  return ProjMatrix2(Unchecked{}, e_[3] * inv, -e_[1] * inv, -e_[2] * inv, e_[0] * inv);
}

ProjMatrix2 ProjMatrix2::pow(long e) const {
  ProjMatrix2 base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(std::labs(e));
  ProjMatrix2 out;
  while (k > 0) {
    if (k & 1UL) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

ProjMatrix2 ProjMatrix2::dagger() const { return ProjMatrix2(Unchecked{}, e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj()); }

ProjMatrix2 ProjMatrix2::galois(long j) const {
  return ProjMatrix2(Unchecked{}, e_[0].galois(j), e_[1].galois(j), e_[2].galois(j), e_[3].galois(j));
}

bool ProjMatrix2::is_scalar() const { return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3]; }

ProjMatrix2 ProjMatrix2::normalized() const {
  std::size_t lead = 0;
  while (e_[lead].is_zero()) ++lead;
  const CyclotomicNumber inv = e_[lead].inverse();
  ProjMatrix2 out = *this;
  for (auto& x : out.e_) x = (x * inv).reduced();
  return out;
}

bool ProjMatrix2::exactly_equal(const ProjMatrix2& o) const { return e_ == o.e_; }

bool operator==(const ProjMatrix2& x, const ProjMatrix2& y) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (x.e_[i].is_zero() != y.e_[i].is_zero()) return false;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (x.e_[i] * y.e_[j] != x.e_[j] * y.e_[i]) return false;
    }
  }
  return true;
}

nlohmann::ordered_json to_json(const ProjMatrix2& m) {
  const ProjMatrix2 n = m.normalized();
  return nlohmann::ordered_json::array({nlohmann::ordered_json::array({to_json(n.a()), to_json(n.b())}),
                                        nlohmann::ordered_json::array({to_json(n.c()), to_json(n.d())})});
}

GammaGenerators gamma_generators(const CyclotomicNumber& q) {
  if (q.is_zero()) throw DomainError("q must be nonzero");
  if (q == CyclotomicNumber(-1)) throw DomainError("q = -1 is excluded");
  const auto b3 = braid_alphabet(3);
  const auto ctx = GroupContext::braid(3);
  const CyclotomicNumber p = -q;
  const ProjMatrix2 A(burau_eval(GroupWord::parse("g1^2", b3, ctx), p));
  const ProjMatrix2 B(burau_eval(GroupWord::parse("g2^2", b3, ctx), p));
  const ProjMatrix2 C(burau_eval(GroupWord::parse("(g1 g2)^3", b3, ctx), p));
  const CyclotomicNumber q2 = q * q;
  const ProjMatrix2 A_closed(q2, 1 + q, 0, 1);
  const ProjMatrix2 B_closed(1, 0, -q - q2, q2);
  const CyclotomicNumber c = -(q2 * q);
  const ProjMatrix2 C_closed(c, 0, 0, c);
  if (!A.exactly_equal(A_closed) || !B.exactly_equal(B_closed) || !C.exactly_equal(C_closed)) {
    throw Error("Burau images disagree with the closed forms of A, B, C");
  }
  return {A, B, C};
}

Alphabet gamma_alphabet() {
  static const Alphabet ab = make_alphabet({"A", "B"});
  return ab;
}

ProjMatrix2 eval_matrix_word(const GroupWord& w, const std::vector<ProjMatrix2>& images) {
  if (images.size() != w.alphabet()->size()) throw DomainError("one image per generator required");
  ProjMatrix2 out;
  for (const auto& s : w.syllables()) out = out * images[static_cast<std::size_t>(s.gen)].pow(s.exp);
  return out;
}

std::optional<long> projective_order(const ProjMatrix2& m, long bound) {
  if (bound < 1) throw DomainError("bound must be positive");
  ProjMatrix2 p = m;
  for (long n = 1; n <= bound; ++n) {
    if (p.is_scalar()) return n;
    p = p * m;
  }
  return std::nullopt;
}

}  // namespace burau_forge
