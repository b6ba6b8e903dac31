#pragma once

// Independent reference implementations used only by the test suite.
// Everything here is deliberately brute-force: product expansion term by
// term, bottom-up counting tables, quadratic convolution. The library must
// agree with these on overlapping domains; the library itself never calls
// anything in this header.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracles {

// c = a * b truncated to `trunc` (largest exponent kept), plain double loop.
inline std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b,
                                       std::size_t trunc) {
  std::vector<mpz_class> c(trunc + 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size() && i <= trunc; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= trunc; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// poly *= (1 + sign * q^e), truncated.
inline void mul_binomial(std::vector<mpz_class>& poly, std::size_t e, int sign,
                         std::size_t trunc) {
  if (e == 0 || e > trunc) {
    if (e == 0) {
      for (auto& c : poly) c *= (1 + sign);
    }
    return;
  }
  for (std::size_t n = trunc; n >= e; --n) {
    if (sign > 0)
      poly[n] += poly[n - e];
    else
      poly[n] -= poly[n - e];
    if (n == e) break;
  }
}

// poly *= 1/(1 - q^e) (geometric factor), truncated.
inline void mul_geometric(std::vector<mpz_class>& poly, std::size_t e,
                          std::size_t trunc) {
  for (std::size_t n = e; n <= trunc; ++n) poly[n] += poly[n - e];
}

// (q^c; q^d)_infinity = prod_{k>=0} (1 - q^{c+dk}), truncated.
inline std::vector<mpz_class> pochhammer_product(std::size_t c, std::size_t d,
                                                 std::size_t trunc) {
  std::vector<mpz_class> poly(trunc + 1, mpz_class(0));
  poly[0] = 1;
  for (std::size_t e = c; e <= trunc; e += d) mul_binomial(poly, e, -1, trunc);
  return poly;
}

// (q; q)_infinity by direct product expansion.
inline std::vector<mpz_class> euler_product(std::size_t trunc) {
  return pochhammer_product(1, 1, trunc);
}

// psi(q) = (q^2; q^2)_inf / (q; q^2)_inf, the division done with geometric
// factors 1/(1 - q^{odd}).
inline std::vector<mpz_class> psi_product(std::size_t trunc) {
  auto poly = pochhammer_product(2, 2, trunc);
  for (std::size_t e = 1; e <= trunc; e += 2) mul_geometric(poly, e, trunc);
  return poly;
}

// Bottom-up table of partition counts with parts drawn from `parts`.
// Returns row: count(n) for n = 0..nmax.
inline std::vector<mpz_class> count_with_parts(const std::vector<std::size_t>& parts,
                                               std::size_t nmax) {
  std::vector<mpz_class> t(nmax + 1, mpz_class(0));
  t[0] = 1;
  for (std::size_t part : parts)
    for (std::size_t n = part; n <= nmax; ++n) t[n] += t[n - part];
  return t;
}

inline std::vector<mpz_class> partitions_table(std::size_t nmax) {
  std::vector<std::size_t> parts;
  for (std::size_t j = 1; j <= nmax; ++j) parts.push_back(j);
  return count_with_parts(parts, nmax);
}

// Partitions of n with no part divisible by ell.
inline std::vector<mpz_class> ell_regular_table(std::size_t ell, std::size_t nmax) {
  std::vector<std::size_t> parts;
  for (std::size_t j = 1; j <= nmax; ++j)
    if (j % ell != 0) parts.push_back(j);
  return count_with_parts(parts, nmax);
}

// Partitions of n into distinct parts, none divisible by p.
// 0/1 knapsack-style table (each part used at most once).
inline std::vector<mpz_class> distinct_regular_table(std::size_t p, std::size_t nmax) {
  std::vector<mpz_class> t(nmax + 1, mpz_class(0));
  t[0] = 1;
  for (std::size_t part = 1; part <= nmax; ++part) {
    if (part % p == 0) continue;
    for (std::size_t n = nmax; n >= part; --n) {
      t[n] += t[n - part];
      if (n == part) break;
    }
  }
  return t;
}

// Legendre symbol by exhaustive square table (independent of Euler criterion).
inline int legendre_table(long a, std::uint32_t p) {
  long r = a % static_cast<long>(p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x)
    if (x * x % p == static_cast<std::uint64_t>(r)) return 1;
  return -1;
}

}  // namespace oracles
