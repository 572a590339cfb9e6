#include "burau_forge/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "burau_forge/error.hpp"

namespace burau_forge {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long m) {
  if (m <= 0) throw DomainError("euler_phi needs a positive argument");
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using IntPoly = std::vector<long>;  // ascending coefficients

// Exact division of monic integer polynomials.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return quot;
}

struct FieldData {
  long m = 1;
  long phi = 1;
  IntPoly cyclotomic;                  // Phi_m, degree phi
  std::vector<std::vector<long>> pow;  // pow[e] = coordinates of zeta^e, 0 <= e < m
};

IntPoly cyclotomic_poly(long m);

const FieldData& field_data(long m) {
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<FieldData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<FieldData>();
  data->m = m;
  data->phi = euler_phi(m);
  data->cyclotomic = cyclotomic_poly(m);
  const long phi = data->phi;
  data->pow.assign(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(phi), 0));
  std::vector<long> cur(static_cast<std::size_t>(phi), 0);
  cur[0] = 1;
  for (long e = 0; e < m; ++e) {
    data->pow[static_cast<std::size_t>(e)] = cur;
    // multiply by x, then subtract top * Phi_m
    const long top = cur[static_cast<std::size_t>(phi - 1)];
    for (long i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (top != 0) {
      for (long i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] -= top * data->cyclotomic[static_cast<std::size_t>(i)];
    }
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(m, std::move(data));
  return *it->second;
}

IntPoly cyclotomic_poly(long m) {
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_exact(num, cyclotomic_poly(d));
  }
  return num;
}

// Sum of raw[e] * zeta^e for exponents e >= 0 (taken mod m).
std::vector<mpq_class> reduce_exponents(const FieldData& f, const std::vector<mpq_class>& raw) {
  std::vector<mpq_class> out(static_cast<std::size_t>(f.phi));
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    const auto& row = f.pow[e % static_cast<std::size_t>(f.m)];
    for (long i = 0; i < f.phi; ++i) {
      const long c = row[static_cast<std::size_t>(i)];
      if (c != 0) out[static_cast<std::size_t>(i)] += raw[e] * c;
    }
  }
  return out;
}

// Solves the (rows x cols) system a * x = b exactly; returns nullopt when
// inconsistent. Assumes full column rank when a solution exists.
std::optional<std::vector<mpq_class>> solve_linear(std::vector<std::vector<mpq_class>> a,
                                                   std::vector<mpq_class> b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const mpq_class inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber() : conductor_(1), coeffs_(1) {}

CyclotomicNumber::CyclotomicNumber(long value) : conductor_(1), coeffs_{mpq_class(value)} {}

CyclotomicNumber::CyclotomicNumber(const mpq_class& value) : conductor_(1), coeffs_{value} {}

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor <= 0) throw DomainError("conductor must be positive");
  if (static_cast<long>(coeffs_.size()) != euler_phi(conductor)) {
    throw DomainError("coefficient count must equal phi(conductor)");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long m, long j) {
  if (m < 1) throw DomainError("root_of_unity needs m >= 1");
  j %= m;
  if (j < 0) j += m;
  const long g = std::gcd(j, m);
  long order = m / g;
  long exp = j / g;
  if (order == 1) return CyclotomicNumber(1);
  if (order == 2) return CyclotomicNumber(-1);
  mpq_class sign = 1;
  if (order % 4 == 2) {
    // zeta_{2o}^e = -zeta_{2o}^{e+o} = -zeta_o^{(e+o)/2} with o, e odd
    const long o = order / 2;
    exp = ((exp + o) / 2) % o;
    order = o;
    sign = -1;
  }
  const auto& f = field_data(order);
  std::vector<mpq_class> c(static_cast<std::size_t>(f.phi));
  const auto& row = f.pow[static_cast<std::size_t>(exp)];
  for (long i = 0; i < f.phi; ++i) c[static_cast<std::size_t>(i)] = sign * row[static_cast<std::size_t>(i)];
  return CyclotomicNumber(order, std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

mpq_class CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("value is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lifted(long target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0) throw DomainError("conductor does not divide lift target");
  const auto& f = field_data(target);
  const long step = target / conductor_;
  std::vector<mpq_class> raw(static_cast<std::size_t>(step * (static_cast<long>(coeffs_.size()) - 1) + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return CyclotomicNumber(target, reduce_exponents(f, raw));
}

CyclotomicNumber CyclotomicNumber::reduced() const {
  if (is_rational()) return CyclotomicNumber(coeffs_[0]);
  const long m = conductor_;
  const auto& fm = field_data(m);
  for (long d = 3; d <= m; ++d) {
    if (m % d != 0 || d % 4 == 2) continue;
    bool fixed = true;
    for (long j = 1 + d; j < m && fixed; j += d) {
      if (std::gcd(j, m) == 1 && galois(j) != *this) fixed = false;
    }
    if (!fixed) continue;
    if (d == m) return *this;
    const long phid = euler_phi(d);
    const long step = m / d;
    std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(fm.phi),
                                          std::vector<mpq_class>(static_cast<std::size_t>(phid)));
    for (long i = 0; i < phid; ++i) {
      const auto& row = fm.pow[static_cast<std::size_t>((i * step) % m)];
      for (long r = 0; r < fm.phi; ++r) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(r)];
    }
    auto sol = solve_linear(std::move(a), coeffs_);
    if (!sol) throw Error("internal: subfield coordinates not found");
    return CyclotomicNumber(d, std::move(*sol));
  }
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ != b.conductor_) {
    const long m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m) + b.lifted(m);
  }
  CyclotomicNumber r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ != b.conductor_) {
    if (a.conductor_ == 1) {
      CyclotomicNumber r = b;
      for (auto& c : r.coeffs_) c *= a.coeffs_[0];
      return r;
    }
    if (b.conductor_ == 1) return b * a;
    const long m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m) * b.lifted(m);
  }
  const auto& f = field_data(a.conductor_);
  const std::size_t n = a.coeffs_.size();
  std::vector<mpq_class> raw(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (b.coeffs_[k] != 0) raw[i + k] += a.coeffs_[i] * b.coeffs_[k];
    }
  }
  return CyclotomicNumber(a.conductor_, reduce_exponents(f, raw));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ != b.conductor_) {
    const long m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (conductor_ == 1) return CyclotomicNumber(mpq_class(1 / coeffs_[0]));
  // Column k of the multiplication matrix holds x * zeta^k.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<mpq_class> basis(n);
    basis[k] = 1;
    const CyclotomicNumber col = *this * CyclotomicNumber(conductor_, std::move(basis));
    for (std::size_t r = 0; r < n; ++r) a[r][k] = col.coeffs_[r];
  }
  std::vector<mpq_class> rhs(n);
  rhs[0] = 1;
  auto sol = solve_linear(std::move(a), std::move(rhs));
  if (!sol) throw Error("internal: inverse system inconsistent");
  return CyclotomicNumber(conductor_, std::move(*sol));
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::galois(long j) const {
  const long m = conductor_;
  j %= m;
  if (j < 0) j += m;
  if (std::gcd(j, m) != 1) throw DomainError("Galois exponent must be coprime to the conductor");
  if (m == 1) return *this;
  const auto& f = field_data(m);
  std::vector<mpq_class> raw(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[(i * static_cast<std::size_t>(j)) % static_cast<std::size_t>(m)] += coeffs_[i];
  return CyclotomicNumber(m, reduce_exponents(f, raw));
}

ComplexBall CyclotomicNumber::embed(long j, unsigned prec) const {
  if (std::gcd(j, conductor_) != 1) throw DomainError("embedding index must be coprime to the conductor");
  const mpq_class target = mpq_class(1, 1) / mpq_class(mpz_class(1) << prec);
  for (unsigned work = prec + 32;; work += 64) {
    const ComplexBall z = root_of_unity_ball(conductor_, j, work + 8);
    ComplexBall acc = ComplexBall::exact(coeffs_.back());
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
      acc = (acc * z + ComplexBall::exact(coeffs_[k])).rounded(work);
    }
    if (acc.radius() <= target) return acc;
    if (work > prec + 8192) throw PrecisionExhausted("embedding did not reach requested precision");
  }
}

std::string CyclotomicNumber::to_string() const {
  std::string s = "[" + std::to_string(conductor_) + ":";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? ", " : " ") + rational_to_string(coeffs_[i]);
  return s + "]";
}

std::optional<long> multiplicative_order(const CyclotomicNumber& x) {
  if (x.is_zero()) throw DivisionByZero();
  // Every root of unity in Q(zeta_m) has order dividing lcm(2, m).
  const long bound = 2 * x.conductor();
  CyclotomicNumber y = x;
  for (long n = 1; n <= bound; ++n) {
    if (y.is_one()) return n;
    y *= x;
  }
  return std::nullopt;
}

std::vector<CyclotomicNumber> galois_conjugates(const CyclotomicNumber& x) {
  const CyclotomicNumber r = x.reduced();
  std::vector<CyclotomicNumber> out;
  for (long j = 1; j <= std::max(1L, r.conductor()); ++j) {
    if (std::gcd(j, r.conductor()) == 1 && (j < r.conductor() || r.conductor() == 1)) out.push_back(r.galois(j));
  }
  return out;
}

ComplexBall embed(const CyclotomicNumber& x, long j, unsigned prec) { return x.embed(j, prec); }

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

nlohmann::ordered_json to_json(const CyclotomicNumber& x) {
  const CyclotomicNumber r = x.reduced();
  nlohmann::ordered_json j;
  j["conductor"] = r.conductor();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : r.coeffs()) coeffs.push_back(rational_to_string(c));
  j["coeffs"] = coeffs;
  return j;
}

CyclotomicNumber cyclotomic_from_json(const nlohmann::ordered_json& j) {
  try {
    const long m = j.at("conductor").get<long>();
    std::vector<mpq_class> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    if (m < 1 || static_cast<long>(coeffs.size()) != euler_phi(m)) throw ParseError("coefficient count mismatch");
    return CyclotomicNumber(m, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad cyclotomic JSON: ") + e.what());
  }
}

}  // namespace burau_forge
