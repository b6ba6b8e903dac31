#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "regulus/partitions.hpp"

namespace regulus {

// A partition generating function expressed as a quotient of Euler factors
//   prod_{d in num} E(d) / prod_{d in den} E(d),   E(d) = (q^d; q^d)_inf.
// Scales may repeat; empty lists mean the constant 1.
struct EtaFactors {
  std::vector<std::uint32_t> num;
  std::vector<std::uint32_t> den;
};

EtaFactors eta_factors_for_tag(const PartitionFunctionTag& tag);

// Coefficient table of a partition generating function reduced mod m,
// 2 <= m <= 255, stored flat for bulk construction and O(1) lookup.
// m == 2 uses a packed bit representation; otherwise one byte per
// coefficient. Instances are built via build_tag_mod.
class FastSeries {
 public:
  std::uint32_t modulus() const { return modulus_; }
  std::size_t truncation() const { return truncation_; }

  std::uint32_t residue(std::uint64_t n) const {
    if (n > truncation_)
      fail_validation("FastSeries::residue beyond truncation");
    if (modulus_ == 2) return (bits_[n >> 6] >> (n & 63)) & 1u;
    return bytes_[n];
  }

 private:
  friend FastSeries build_tag_mod(const PartitionFunctionTag&, std::uint32_t,
                                  std::size_t);
  std::uint32_t modulus_ = 0;
  std::size_t truncation_ = 0;
  std::vector<std::uint8_t> bytes_;
  std::vector<std::uint64_t> bits_;
};

// Builds the coefficient table of `tag`'s generating function mod m up to
// `truncation`. m == 2 runs a word-packed Newton reciprocal; 3 <= m <= 255
// runs byte-array Euler-factor passes. Rejects m outside [2, 255].
FastSeries build_tag_mod(const PartitionFunctionTag& tag, std::uint32_t m,
                         std::size_t truncation);

}  // namespace regulus
