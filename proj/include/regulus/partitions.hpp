#pragma once

#include <cstdint>
#include <string>

#include "regulus/series.hpp"

namespace regulus {

// Which counting function a claim or a series build refers to.
struct PartitionFunctionTag {
  enum class Kind { unrestricted, regular, distinct_regular };

  Kind kind = Kind::unrestricted;
  std::uint32_t param = 0;  // ell (>= 2) for regular, p (prime >= 5) for distinct_regular

  static PartitionFunctionTag p() { return {Kind::unrestricted, 0}; }
  static PartitionFunctionTag regular(std::uint32_t ell);
  static PartitionFunctionTag distinct_regular(std::uint32_t prime);

  // "p", "b_5", "b'_7" — used in reports.
  std::string name() const;
  // Grammar accepted by the CLI: "p", "b<ell>", "bp<prime>".
  static PartitionFunctionTag parse(const std::string& text);

  friend bool operator==(const PartitionFunctionTag& a,
                         const PartitionFunctionTag& b) {
    return a.kind == b.kind && a.param == b.param;
  }
  friend bool operator<(const PartitionFunctionTag& a,
                        const PartitionFunctionTag& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.param < b.param;
  }
};

// p(n) by the pentagonal-number recurrence
// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
Series partition_numbers(std::size_t truncation, std::uint32_t modulus = 0);

// b_ell(n): partitions of n with no part divisible by ell. Series path:
// partition series times the ell-scaled pentagonal series (sparse factor).
Series b_ell_series(std::uint32_t ell, std::size_t truncation,
                    std::uint32_t modulus = 0);

// b'_p(n): p-regular partitions with distinct parts; generating function
// (-q; q)_inf / (-q^p; q^p)_inf realized through Euler-series quotients.
Series b_p_prime_series(std::uint32_t p, std::size_t truncation,
                        std::uint32_t modulus = 0);

Series series_for_tag(const PartitionFunctionTag& tag, std::size_t truncation,
                      std::uint32_t modulus = 0);

// Independent counting oracles (recursive with memoization); guarded to
// n <= 60 — they exist for verification, not production counting.
mpz_class b_ell_enumerate(std::uint32_t ell, std::size_t n);
mpz_class partitions_enumerate(std::size_t n);
mpz_class distinct_regular_enumerate(std::uint32_t p, std::size_t n);
mpz_class enumerate_tag(const PartitionFunctionTag& tag, std::size_t n);

// Checks b'_p(pn + (p^2-1)/24) == b_p(n) (mod 2) for all n <= n_max.
struct RelationReport {
  bool match = false;
  std::uint32_t p = 0;
  std::uint64_t offset = 0;
  std::size_t n_checked = 0;
  std::size_t witness = 0;  // first failing n when !match
  mpz_class lhs, rhs;
};

RelationReport check_bp_prime_relation(std::uint32_t p, std::size_t n_max);

// Shared validation helper: nonnegative odd-prime test for small integers.
bool is_prime_u32(std::uint32_t n);

}  // namespace regulus
