#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regulus/series.hpp"

namespace regulus {

// Description of a theta-type generator. `general` is the two-parameter
// series f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2} restricted to
// monomial arguments a = a_sign * q^r, b = b_sign * q^s (the only shape used
// anywhere here). The named kinds are its classical specializations.
struct ThetaSpec {
  enum class Kind { general, psi, f_neg, euler, jacobi_cube };

  Kind kind = Kind::general;
  int a_sign = 1;       // +1 or -1
  int b_sign = 1;       // +1 or -1
  std::uint64_t r = 1;  // positive
  std::uint64_t s = 0;  // nonnegative; r + s > 0

  static ThetaSpec general(int a_sign, std::uint64_t r, int b_sign, std::uint64_t s);
  static ThetaSpec psi() { return {Kind::psi, 1, 1, 1, 3}; }
  static ThetaSpec f_neg() { return {Kind::f_neg, -1, -1, 1, 2}; }
  static ThetaSpec euler() { return {Kind::euler, -1, -1, 1, 2}; }
  static ThetaSpec jacobi_cube() { return {Kind::jacobi_cube, 1, 1, 1, 1}; }
};

// (q; q)_infinity via the pentagonal exponent formula: coefficient (-1)^k at
// k(3k+-1)/2, never built by multiplying out the product.
Series euler_series(std::size_t truncation, std::uint32_t modulus = 0);

// psi(q) = f(q, q^3): coefficient 1 at every triangular number.
Series psi_series(std::size_t truncation, std::uint32_t modulus = 0);

// Sum side of Jacobi's identity: sum (-1)^n (2n+1) q^{n(n+1)/2}.
Series jacobi_cube_series(std::size_t truncation, std::uint32_t modulus = 0);

// Expand any ThetaSpec by direct exponent generation.
Series theta_f(const ThetaSpec& spec, std::size_t truncation,
               std::uint32_t modulus = 0);

// Product prod_t (q^{d_t}; q^{d_t})_infinity ^ {e_t}: scales pairwise
// distinct, exponents nonzero.
struct EtaQuotientSpec {
  struct Factor {
    std::uint64_t scale;
    std::int64_t exponent;
  };
  std::vector<Factor> factors;

  // Grammar: comma-separated "d^e" entries, e.g. "5^1,1^-1".
  static EtaQuotientSpec parse(const std::string& text);
  std::string to_string() const;
  void validate() const;
};

Series eta_quotient_series(const EtaQuotientSpec& spec, std::size_t truncation,
                           std::uint32_t modulus = 0);

// Jacobi triple product at z = sign * q^t: compares sum and product sides as
// series through the given truncation (both sides shifted into ordinary power
// series; the shift bookkeeping cancels exactly).
CompareResult verify_jtp(std::uint64_t t, int sign, std::size_t truncation);

// sum (-1)^n (2n+1) q^{n(n+1)/2} == euler_series^3.
CompareResult verify_jacobi_cube(std::size_t truncation);

// Quintuple product at x = q^u, lambda = q^v:
// f(-x^2, -lx) f(-lx^3) / f(-x, -lx^2) == f(-l^2 x^3, -l x^6) + x f(-l, -l^2 x^9).
CompareResult verify_quintuple(std::uint64_t u, std::uint64_t v,
                               std::size_t truncation);

// The 5-dissection components of (q;q)_infinity:
//   a(q) = (q^10, q^15; q^25)_inf / (q^5, q^20; q^25)_inf,  b(q) = 1/a(q),
//   (q;q)_inf == (q^25; q^25)_inf * (a(q) - q - q^2 b(q)).
struct Ramanujan5Report {
  CompareResult result;
  Series a, b;
};

Ramanujan5Report ramanujan5_check(std::size_t truncation);

}  // namespace regulus
