#pragma once

#include <complex>
#include <vector>

#include "circanon/connection_set.hpp"
#include "circanon/cyclotomic.hpp"

namespace circanon {

/// Exact spectrum of a circulant: eigenvalues[a] is the sum of zeta_n^(a*j)
/// over j in S, in canonical reduced form.
struct Spectrum {
  int n = 0;
  std::vector<CycloInt> eigenvalues;
  int distinct_count = 0;
};

Spectrum spectrum(const ConnectionSet& s);

/// Number of pairwise distinct eigenvalues, computed without materializing
/// the Spectrum.
int distinct_eigenvalue_count(const ConnectionSet& s);

/// All n eigenvalues pairwise distinct.
bool has_simple_spectrum(const ConnectionSet& s);

/// Exactly ceil((n+1)/2) distinct eigenvalues, the maximum an undirected
/// circulant can have. Requires inverse-closed S.
bool has_saturated_spectrum(const ConnectionSet& s);

int saturated_bound(int n);  // ceil((n+1)/2)

/// Exact eigenvalues evaluated in double precision (via reduced forms).
std::vector<std::complex<double>> numeric_spectrum(const ConnectionSet& s);

/// Direct numeric DFT of the characteristic vector of S, an independent
/// route to the same values.
std::vector<std::complex<double>> dft_characteristic(const ConnectionSet& s);

/// True iff the two numeric routes agree entrywise within tolerance.
bool dft_cross_check(const ConnectionSet& s, double tolerance);

}  // namespace circanon
