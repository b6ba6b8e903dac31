#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regulus/series.hpp"

namespace regulus {

enum class DissectFunction { psi, f_neg };

// One component of a residue-class dissection: a monomial prefactor
// sign * q^{prefactor_exp} times either a general theta series
// f(+-q^{theta_r}, +-q^{theta_s}) (inner signs negative exactly when the
// dissected function is f(-q)) or, for the special component, psi(q^{p^2})
// respectively f(-q^{p^2}).
struct DissectionComponent {
  int k = 0;                      // component index
  bool special = false;
  int sign = 1;                   // prefactor sign
  std::uint64_t prefactor_exp = 0;
  std::uint64_t theta_r = 0, theta_s = 0;  // inner exponents (general case)
  std::uint32_t residue_class = 0;         // exponents land in this class mod p

  std::string describe(DissectFunction f, std::uint32_t p) const;
};

// Certificate for one prime: the symbolic components, the classes they
// occupy, and the numeric replay against the dissected function.
struct DissectionReport {
  DissectFunction function = DissectFunction::psi;
  std::uint32_t prime = 0;
  std::size_t truncation = 0;
  std::vector<DissectionComponent> components;
  std::vector<std::uint32_t> support;  // sorted distinct classes
  std::uint32_t special_class = 0;
  int special_k = 0;      // excluded index k* (f only; 0 for psi)
  bool class_consistent = false;  // every term of each component hit its class
  bool matched = false;
  CompareResult comparison;
};

// psi(q) = sum_{k=0}^{(p-3)/2} q^{k(k+1)/2}
//            f(q^{(p^2+(2k+1)p)/2}, q^{(p^2-(2k+1)p)/2})
//          + q^{(p^2-1)/8} psi(q^{p^2});   p odd prime, N >= p^2.
DissectionReport psi_dissection(std::uint32_t p, std::size_t truncation);

// f(-q) = sum_{k=-(p-1)/2, k != k*}^{(p-1)/2} (-1)^k q^{(3k^2+k)/2}
//            f(-q^{(3p^2+(6k+1)p)/2}, -q^{(3p^2-(6k+1)p)/2})
//          + (-1)^{k*} q^{(p^2-1)/24} f(-q^{p^2});
// k* = (p-1)/6 or -(p+1)/6, whichever is an integer; p prime >= 5, N >= 3p^2.
DissectionReport f_dissection(std::uint32_t p, std::size_t truncation);

// Exhaustive residue-class separation check:
//   psi — the exponents k(k+1)/2 are pairwise distinct mod p over
//         0 <= k <= (p-1)/2;
//   f   — (3k^2+k)/2 never meets (p^2-1)/24 mod p for k != k*.
struct DisjointnessResult {
  bool pass = false;
  std::uint32_t prime = 0;
  int witness_k = 0, witness_m = 0;  // offending pair when !pass
  std::string detail;
};

DisjointnessResult disjointness_check(DissectFunction f, std::uint32_t p);

// The residue classes mod p that carry nonzero dissection components;
// complements of this set yield vanishing coefficient progressions.
std::vector<std::uint32_t> support_classes(DissectFunction f, std::uint32_t p);

// The excluded index k* for f(-q) at p (>= 5, p != 3).
int f_special_k(std::uint32_t p);

}  // namespace regulus
