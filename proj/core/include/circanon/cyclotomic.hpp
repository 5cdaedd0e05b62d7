#pragma once

#include <gmpxx.h>

#include <complex>
#include <span>
#include <vector>

namespace circanon {

using BigInt = mpz_class;
/// Dense integer polynomial, coefficients stored by ascending degree.
using IntPoly = std::vector<BigInt>;

int euler_phi(int n);
std::vector<int> divisors(int n);

/// The n-th cyclotomic polynomial Phi_n: monic, degree phi(n), computed by
/// exact division of x^n - 1 by the Phi_d of the proper divisors d of n.
/// Memoized; safe for concurrent callers.
const IntPoly& cyclotomic_polynomial(int n);

/// Integer combination of powers of zeta_n prior to reduction mod Phi_n.
struct CycloPoly {
  int n = 1;
  std::vector<BigInt> coeffs;  // coeffs[k] multiplies zeta_n^k; length <= n
};

/// Element of Z[zeta_n] in canonical residue form mod Phi_n. The coefficient
/// vector always has length phi(n), so two values are equal exactly when
/// their coefficient vectors are equal. No floating-point equality anywhere.
class CycloInt {
 public:
  explicit CycloInt(int n);  // zero
  CycloInt(int n, std::vector<BigInt> coeffs);

  int order() const { return n_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Numeric value at zeta_n = exp(-2*pi*i/n); for cross-checks only.
  std::complex<double> evaluate() const;

  CycloInt& operator+=(const CycloInt& rhs);
  CycloInt& operator-=(const CycloInt& rhs);
  friend CycloInt operator+(CycloInt lhs, const CycloInt& rhs) { return lhs += rhs; }
  friend CycloInt operator-(CycloInt lhs, const CycloInt& rhs) { return lhs -= rhs; }
  friend CycloInt operator*(const CycloInt& lhs, const CycloInt& rhs);
  CycloInt operator-() const;

  friend bool operator==(const CycloInt& a, const CycloInt& b) = default;
  /// Lexicographic coefficient order; used only to sort values for
  /// distinctness counting.
  friend bool operator<(const CycloInt& a, const CycloInt& b);

 private:
  int n_;
  std::vector<BigInt> coeffs_;
};

/// Canonical residue of p modulo Phi_n. Ring homomorphism from Z[x]/(x^n-1).
CycloInt reduce(const CycloPoly& p);

/// Reduced sum of zeta_n^e over the exponent multiset (exponents mod n).
CycloInt root_power_sum(int n, std::span<const int> exponents);

/// True iff all 2^bound subset sums of {zeta_n^1, ..., zeta_n^bound} are
/// pairwise distinct in Z[zeta_n]. Throws when bound > 20 (enumeration cap).
bool subset_sum_distinctness(int n, int bound);

/// Precomputed residues x^k mod Phi_n for k in [phi(n), n). Reduces a count
/// vector (one integer weight per power of zeta_n) into canonical form with
/// plain 64-bit arithmetic whenever the result provably fits; the big-integer
/// route is always available for cross-checks and as fallback.
class CycloReducer {
 public:
  explicit CycloReducer(int n);

  int order() const { return n_; }
  int phi() const { return phi_; }

  /// True when reduce_counts may be used for weights bounded by max_weight.
  bool fits_int64(long long max_weight) const;

  /// |counts| = n; requires fits_int64. Returns the phi(n) canonical
  /// coefficients.
  std::vector<long long> reduce_counts(std::span<const long long> counts) const;

  /// Exact big-integer route, valid for any weights.
  CycloInt reduce_counts_exact(std::span<const long long> counts) const;

 private:
  int n_;
  int phi_;
  long long row_abs_sum_;                       // max over k of sum_i |table[k][i]|
  std::vector<std::vector<long long>> table_;   // x^(phi+r) mod Phi_n
  std::vector<std::vector<BigInt>> table_big_;
};

/// Shared memoized reducer per n; safe for concurrent callers.
const CycloReducer& cyclo_reducer(int n);

}  // namespace circanon
