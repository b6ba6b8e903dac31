#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regulus/partitions.hpp"

namespace regulus {

// Legendre symbol (a | p) for an odd prime p: +1, -1, or 0.
int legendre(std::int64_t a, std::uint32_t p);

// One arithmetic-progression congruence claim:
//   function(A n + B) == 0 (mod m)  for all n >= 0.
struct CongruenceClaim {
  PartitionFunctionTag function = PartitionFunctionTag::p();
  std::uint64_t A = 1;
  std::uint64_t B = 0;
  std::uint32_t m = 2;
  std::string origin;  // catalog id with parameters, or "empirical — unproven"
};

// Parameter bundle for instantiating a catalog family. Which fields are
// required depends on the family; family_claims validates and reports
// precise errors. `index` selects the family's own index (a residue i/j/r,
// or a numbered formula inside multi-formula families); absent means all.
struct FamilyParams {
  std::string catalog_id;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> alpha;
  std::optional<std::uint32_t> index;
  std::vector<std::uint32_t> primes;  // multiprime families, outermost first
  std::optional<std::uint32_t> k;     // lift-family multiplier
};

// Expands a family instance into concrete claims, in canonical order.
std::vector<CongruenceClaim> family_claims(const FamilyParams& params);

// Truncation and confirmation policy for verification scans.
struct ScanOptions {
  std::size_t n_count = 200;       // requested progression points per claim
  std::size_t max_truncation = 0;  // explicit series cap; 0 = adaptive
  bool explicit_cap = false;       // max_truncation was user-supplied
  std::uint64_t exact_confirm_cap = 50000;  // exact recompute bound
};

struct ScanResult {
  CongruenceClaim claim;
  std::size_t n_requested = 0;
  std::size_t n_checked = 0;  // points actually examined
  bool verified = false;      // every examined point was 0 mod m
  bool capped = false;        // n_checked < n_requested (truncation cap)
  // Counterexample data, meaningful when !verified:
  std::uint64_t counter_n = 0;
  std::uint64_t counter_argument = 0;
  std::uint32_t counter_value = 0;     // residue mod m at the counterexample
  bool exact_confirmed = false;        // recomputed with exact arithmetic
  bool enumeration_confirmed = false;  // reproduced by direct enumeration
  std::string counter_exact;           // decimal value when exact_confirmed
};

// Verifies claims against coefficient tables built once per
// (function, modulus) group. Default truncation per group is
//   min(largest argument needed, max(default cap, largest offset B)),
// with default caps 8,000,000 (m == 2) and 2,000,000 (3 <= m <= 255);
// the max(..., B) term guarantees at least the n = 0 point for every
// claim. A claim that cannot reach its full n_count is reported with
// capped = true. An explicit cap that leaves some claim no points at all
// raises a resource error.
std::vector<ScanResult> verify_claims(const std::vector<CongruenceClaim>& claims,
                                      const ScanOptions& options);
ScanResult verify_claim(const CongruenceClaim& claim,
                        const ScanOptions& options);

// Residues j in [0, p) whose progression the family's sign condition
// admits: legendre(c j + 1, p) == -1 with c = 24 or 8 as the family
// dictates. Accepts the -j (and sellers-parity) family ids.
std::vector<std::uint32_t> admissible_j(const std::string& catalog_id,
                                        std::uint32_t p);

// --- quadratic-form cover / uniqueness certificates ---
// P(x) = x(3x+1)/2 and T(x) = x(x+1)/2 below; all checks are exhaustive
// over full residue systems mod p.

struct CoverReport {
  bool pass = false;
  std::uint32_t prime = 0;
  std::vector<std::uint32_t> missing;  // residues never attained
  std::string detail;
};

// 2 P(k) + 5 P(m) attains every residue mod p; requires legendre(-10,p) = -1.
CoverReport kmj_cover_check(std::uint32_t p);
// T(k) + 4 P(m) attains every residue mod p; requires p == 5 (mod 6).
CoverReport b8_cover_check(std::uint32_t p);
// T(k) + 4 T(m) attains every residue mod p; requires p == 3 (mod 4).
CoverReport b16_cover_check(std::uint32_t p);

struct UniquenessReport {
  bool pass = false;
  std::uint32_t prime = 0;
  std::uint64_t solutions = 0;  // pairs attaining the target class
  std::string detail;
};

// 2 P(k) + 5 P(m) == 7 (p^2-1)/24 mod p, k, m in [-(p-1)/2, (p-1)/2],
// only at k = m = k*; requires legendre(-10, p) = -1.
UniquenessReport b5_uniqueness_check(std::uint32_t p);
// T(k) + 4 P(m) == 7 (p^2-1)/24 mod p, k in [0, (p-1)/2],
// m in [-(p-1)/2, (p-1)/2], only at k = (p-1)/2, m = k*; p == 5 (mod 6).
UniquenessReport b8_uniqueness_check(std::uint32_t p);
// T(k) + 4 T(m) == 5 (p^2-1)/8 mod p, k, m in [0, p-1], only at
// k = m = (p-1)/2; p == 3 (mod 4).
UniquenessReport b16_uniqueness_check(std::uint32_t p);

// --- empirical search ---

struct SearchOptions {
  PartitionFunctionTag function = PartitionFunctionTag::p();
  std::uint32_t m = 2;
  std::uint64_t A_max = 20;
  std::uint64_t B_max = 0;  // 0: no bound beyond B < A
  std::size_t n_count = 500;
  std::size_t max_truncation = 0;  // 0 = adaptive
  bool explicit_cap = false;
};

// Scans all progressions A <= A_max, B < min(A, B_max or A) for
// function(A n + B) == 0 (mod m) over n_count points, dropping hits
// subsumed by an earlier hit (A' | A and B == B' mod A'). Hits come back
// as verified ScanResults with origin "empirical — unproven".
std::vector<ScanResult> search_congruences(const SearchOptions& options);

// --- catalog ---

struct CatalogEntry {
  std::string id;
  std::string function;    // which counting function the family constrains
  std::string parameters;  // accepted FamilyParams fields and ranges
  std::string hypotheses;  // arithmetic side conditions
  std::string description; // the progression shapes, as text
  std::string anchor;      // mechanism the family rests on
  int stated_alpha_min = -1;   // -1: family has no alpha parameter
  int shipped_alpha_min = -1;  // larger than stated when a formula is flagged
  std::string notes;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& id);

}  // namespace regulus
