#include "circanon/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace circanon {

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> low, high;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

namespace {

int poly_degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

// Quotient of p by the monic divisor d; requires exact divisibility.
IntPoly poly_divexact(const IntPoly& p, const IntPoly& d) {
  const int dp = poly_degree(p);
  const int dd = poly_degree(d);
  if (dd < 0 || d[dd] != 1) throw std::logic_error("poly_divexact: divisor must be monic");
  if (dp < dd) throw std::logic_error("poly_divexact: degree underflow");
  IntPoly rem = p;
  IntPoly quot(dp - dd + 1, BigInt(0));
  for (int k = dp; k >= dd; --k) {
    const BigInt c = rem[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= c * d[i];
  }
  if (poly_degree(rem) >= 0) throw std::logic_error("poly_divexact: remainder is nonzero");
  return quot;
}

// Remainder of p modulo the monic divisor d, trimmed to deg d coefficients.
IntPoly poly_mod(IntPoly p, const IntPoly& d) {
  const int dd = poly_degree(d);
  for (int k = poly_degree(p); k >= dd; --k) {
    const BigInt c = p[k];
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) p[k - dd + i] -= c * d[i];
  }
  p.resize(dd);
  return p;
}

std::mutex g_phi_mutex;
std::map<int, std::unique_ptr<IntPoly>> g_phi_memo;

}  // namespace

const IntPoly& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_memo.find(n);
    if (it != g_phi_memo.end()) return *it->second;
  }
  // Compute outside the lock; proper divisors first.
  IntPoly p(n + 1, BigInt(0));
  p[0] = -1;
  p[n] = 1;  // x^n - 1
  for (int d : divisors(n)) {
    if (d == n) continue;
    p = poly_divexact(p, cyclotomic_polynomial(d));
  }
  p.resize(poly_degree(p) + 1);
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto [it, inserted] = g_phi_memo.emplace(n, std::make_unique<IntPoly>(std::move(p)));
  (void)inserted;  // a concurrent equal computation is fine to drop
  return *it->second;
}

CycloInt::CycloInt(int n) : n_(n), coeffs_(euler_phi(n), BigInt(0)) {
  if (n < 1) throw std::invalid_argument("CycloInt: n must be positive");
}

CycloInt::CycloInt(int n, std::vector<BigInt> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != euler_phi(n)) {
    throw std::invalid_argument("CycloInt: coefficient vector must have length phi(n)");
  }
}

bool CycloInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::complex<double> CycloInt::evaluate() const {
  const std::complex<double> zeta = std::polar(1.0, -2.0 * std::numbers::pi / n_);
  std::complex<double> acc(0.0, 0.0);
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    acc = acc * zeta + std::complex<double>(coeffs_[k].get_d(), 0.0);
  }
  return acc;
}

CycloInt& CycloInt::operator+=(const CycloInt& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("CycloInt: mixed moduli");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("CycloInt: mixed moduli");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloInt operator*(const CycloInt& lhs, const CycloInt& rhs) {
  if (lhs.n_ != rhs.n_) throw std::invalid_argument("CycloInt: mixed moduli");
  const std::size_t phi = lhs.coeffs_.size();
  IntPoly prod(2 * phi, BigInt(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return CycloInt(lhs.n_, poly_mod(std::move(prod), cyclotomic_polynomial(lhs.n_)));
}

CycloInt CycloInt::operator-() const {
  CycloInt out(n_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

bool operator<(const CycloInt& a, const CycloInt& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

CycloInt reduce(const CycloPoly& p) {
  if (static_cast<int>(p.coeffs.size()) > p.n) {
    throw std::invalid_argument("reduce: CycloPoly longer than its order");
  }
  IntPoly work(p.coeffs.begin(), p.coeffs.end());
  work.resize(std::max<std::size_t>(work.size(), euler_phi(p.n)), BigInt(0));
  return CycloInt(p.n, poly_mod(std::move(work), cyclotomic_polynomial(p.n)));
}

CycloInt root_power_sum(int n, std::span<const int> exponents) {
  CycloPoly p;
  p.n = n;
  p.coeffs.assign(n, BigInt(0));
  for (int e : exponents) {
    p.coeffs[((e % n) + n) % n] += 1;
  }
  return reduce(p);
}

bool subset_sum_distinctness(int n, int bound) {
  if (bound < 0 || bound > 20) {
    throw std::invalid_argument("subset_sum_distinctness: bound must be in [0, 20]");
  }
  const CycloReducer& red = cyclo_reducer(n);
  const int phi = red.phi();

  // Reduced forms of the single powers zeta_n^1 .. zeta_n^bound.
  std::vector<std::vector<long long>> powers;
  const bool small = red.fits_int64(1);
  std::vector<CycloInt> powers_big;
  for (int j = 1; j <= bound; ++j) {
    std::vector<long long> counts(n, 0);
    counts[j % n] = 1;
    if (small) {
      powers.push_back(red.reduce_counts(counts));
    } else {
      powers_big.push_back(red.reduce_counts_exact(counts));
    }
  }

  const std::size_t total = std::size_t{1} << bound;
  if (small) {
    std::vector<std::vector<long long>> sums(total, std::vector<long long>(phi, 0));
    for (std::size_t mask = 1; mask < total; ++mask) {
      const int low = std::countr_zero(mask);
      sums[mask] = sums[mask & (mask - 1)];
      for (int i = 0; i < phi; ++i) sums[mask][i] += powers[low][i];
    }
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
  }
  std::vector<CycloInt> sums(total, CycloInt(n));
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + powers_big[low];
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

CycloReducer::CycloReducer(int n) : n_(n), phi_(euler_phi(n)) {
  const IntPoly& mod = cyclotomic_polynomial(n);
  table_big_.reserve(n_ - phi_);
  // x^phi mod Phi_n = -(lower coefficients); then multiply by x step by step.
  std::vector<BigInt> cur(phi_, BigInt(0));
  for (int i = 0; i < phi_; ++i) cur[i] = -mod[i];
  for (int k = phi_; k < n_; ++k) {
    table_big_.push_back(cur);
    // cur <- x * cur mod Phi_n
    BigInt top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi_; ++i) cur[i] -= top * mod[i];
    }
  }
  row_abs_sum_ = 0;
  bool fits = true;
  for (const auto& rowv : table_big_) {
    BigInt s(0);
    for (const BigInt& c : rowv) s += abs(c);
    if (!s.fits_slong_p()) fits = false;
    if (fits) row_abs_sum_ = std::max(row_abs_sum_, static_cast<long long>(s.get_si()));
  }
  if (fits) {
    table_.reserve(table_big_.size());
    for (const auto& rowv : table_big_) {
      std::vector<long long> r(phi_);
      for (int i = 0; i < phi_; ++i) {
        if (!rowv[i].fits_slong_p()) {
          fits = false;
          break;
        }
        r[i] = rowv[i].get_si();
      }
      if (!fits) break;
      table_.push_back(std::move(r));
    }
  }
  if (!fits) {
    table_.clear();
    row_abs_sum_ = -1;
  }
}

bool CycloReducer::fits_int64(long long max_weight) const {
  if (row_abs_sum_ < 0) return false;
  // result[i] = counts[i] + sum over rows of counts[k] * table[k][i];
  // bound each |result[i]| by max_weight * (1 + rows * row_abs_sum_).
  const long long rows = n_ - phi_;
  const long long budget = (std::int64_t{1} << 62) / std::max<long long>(1, max_weight);
  return 1 + rows * row_abs_sum_ < budget;
}

std::vector<long long> CycloReducer::reduce_counts(std::span<const long long> counts) const {
  if (static_cast<int>(counts.size()) != n_) {
    throw std::invalid_argument("CycloReducer::reduce_counts: length must be n");
  }
  std::vector<long long> out(counts.begin(), counts.begin() + phi_);
  for (int k = phi_; k < n_; ++k) {
    const long long c = counts[k];
    if (c == 0) continue;
    const auto& rowv = table_[k - phi_];
    for (int i = 0; i < phi_; ++i) out[i] += c * rowv[i];
  }
  return out;
}

CycloInt CycloReducer::reduce_counts_exact(std::span<const long long> counts) const {
  if (static_cast<int>(counts.size()) != n_) {
    throw std::invalid_argument("CycloReducer::reduce_counts_exact: length must be n");
  }
  std::vector<BigInt> out(phi_, BigInt(0));
  for (int i = 0; i < phi_; ++i) out[i] = static_cast<long>(counts[i]);
  for (int k = phi_; k < n_; ++k) {
    const long c = static_cast<long>(counts[k]);
    if (c == 0) continue;
    const auto& rowv = table_big_[k - phi_];
    for (int i = 0; i < phi_; ++i) out[i] += c * rowv[i];
  }
  return CycloInt(n_, std::move(out));
}

namespace {
std::mutex g_reducer_mutex;
std::map<int, std::unique_ptr<CycloReducer>> g_reducer_memo;
}  // namespace

const CycloReducer& cyclo_reducer(int n) {
  {
    std::lock_guard<std::mutex> lock(g_reducer_mutex);
    auto it = g_reducer_memo.find(n);
    if (it != g_reducer_memo.end()) return *it->second;
  }
  auto fresh = std::make_unique<CycloReducer>(n);
  std::lock_guard<std::mutex> lock(g_reducer_mutex);
  auto [it, inserted] = g_reducer_memo.emplace(n, std::move(fresh));
  (void)inserted;
  return *it->second;
}

}  // namespace circanon
