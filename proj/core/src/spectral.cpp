#include "circanon/spectral.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace circanon {

namespace {

// Count vector of lambda_a: entry k is the number of j in S with a*j = k (mod n).
std::vector<long long> eigen_counts(const ConnectionSet& s, int a) {
  const int n = s.modulus();
  std::vector<long long> counts(n, 0);
  for (int j : s.elements()) {
    counts[static_cast<int>((static_cast<long long>(a) * j) % n)] += 1;
  }
  return counts;
}

template <typename T>
int count_distinct_sorted(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  int distinct = values.empty() ? 0 : 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] == values[i - 1])) ++distinct;
  }
  return distinct;
}

}  // namespace

int saturated_bound(int n) { return (n + 2) / 2; }

Spectrum spectrum(const ConnectionSet& s) {
  const int n = s.modulus();
  const CycloReducer& red = cyclo_reducer(n);
  Spectrum out;
  out.n = n;
  out.eigenvalues.reserve(n);
  for (int a = 0; a < n; ++a) {
    const auto counts = eigen_counts(s, a);
    if (red.fits_int64(n)) {
      const auto coeffs = red.reduce_counts(counts);
      std::vector<BigInt> big(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) big[i] = BigInt(static_cast<long>(coeffs[i]));
      out.eigenvalues.emplace_back(n, std::move(big));
    } else {
      out.eigenvalues.push_back(red.reduce_counts_exact(counts));
    }
  }
  out.distinct_count = count_distinct_sorted(out.eigenvalues);
  return out;
}

int distinct_eigenvalue_count(const ConnectionSet& s) {
  const int n = s.modulus();
  const CycloReducer& red = cyclo_reducer(n);
  if (red.fits_int64(n)) {
    std::vector<std::vector<long long>> keys;
    keys.reserve(n);
    for (int a = 0; a < n; ++a) keys.push_back(red.reduce_counts(eigen_counts(s, a)));
    return count_distinct_sorted(std::move(keys));
  }
  std::vector<CycloInt> vals;
  vals.reserve(n);
  for (int a = 0; a < n; ++a) vals.push_back(red.reduce_counts_exact(eigen_counts(s, a)));
  return count_distinct_sorted(std::move(vals));
}

bool has_simple_spectrum(const ConnectionSet& s) {
  return distinct_eigenvalue_count(s) == s.modulus();
}

bool has_saturated_spectrum(const ConnectionSet& s) {
  if (!s.inverse_closed()) {
    throw std::invalid_argument("has_saturated_spectrum: S must be inverse-closed");
  }
  return distinct_eigenvalue_count(s) == saturated_bound(s.modulus());
}

std::vector<std::complex<double>> numeric_spectrum(const ConnectionSet& s) {
  const Spectrum sp = spectrum(s);
  std::vector<std::complex<double>> out;
  out.reserve(sp.eigenvalues.size());
  for (const CycloInt& v : sp.eigenvalues) out.push_back(v.evaluate());
  return out;
}

std::vector<std::complex<double>> dft_characteristic(const ConnectionSet& s) {
  const int n = s.modulus();
  const double angle = -2.0 * std::numbers::pi / n;
  std::vector<std::complex<double>> roots(n);
  for (int m = 0; m < n; ++m) roots[m] = std::polar(1.0, angle * m);
  std::vector<std::complex<double>> out(n, {0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    std::complex<double> acc(0.0, 0.0);
    for (int j : s.elements()) {
      acc += roots[static_cast<int>((static_cast<long long>(i) * j) % n)];
    }
    out[i] = acc;
  }
  return out;
}

bool dft_cross_check(const ConnectionSet& s, double tolerance) {
  if (tolerance <= 0) throw std::invalid_argument("dft_cross_check: tolerance must be positive");
  const auto exact = numeric_spectrum(s);
  const auto dft = dft_characteristic(s);
  for (std::size_t i = 0; i < exact.size(); ++i) {
    if (std::abs(exact[i] - dft[i]) > tolerance) return false;
  }
  return true;
}

}  // namespace circanon
