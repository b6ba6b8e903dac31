#include "doctest.h"

#include <algorithm>
#include <vector>

#include "regulus/fastseries.hpp"

using namespace regulus;

namespace {

void check_against_exact(const PartitionFunctionTag& tag, std::uint32_t m,
                         std::size_t N) {
  FastSeries fast = build_tag_mod(tag, m, N);
  CHECK(fast.modulus() == m);
  CHECK(fast.truncation() == N);
  Series slow = series_for_tag(tag, N, m);
  for (std::size_t n = 0; n <= N; ++n) {
    if (fast.residue(n) != slow.residue(n)) {
      CAPTURE(tag.name());
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(fast.residue(n) == slow.residue(n));
    }
  }
}

}  // namespace

TEST_CASE("fast builder agrees with the generic path across tags and moduli") {
  const std::size_t N = 10000;
  std::vector<PartitionFunctionTag> tags = {
      PartitionFunctionTag::p(),
      PartitionFunctionTag::regular(2),
      PartitionFunctionTag::regular(5),
      PartitionFunctionTag::regular(13),
      PartitionFunctionTag::distinct_regular(5),
      PartitionFunctionTag::distinct_regular(7),
  };
  for (const auto& tag : tags)
    for (std::uint32_t m : {2u, 3u, 5u, 6u, 10u, 255u})
      check_against_exact(tag, m, N);
}

TEST_CASE("fast builder agrees at a larger truncation") {
  check_against_exact(PartitionFunctionTag::regular(4), 2, 30000);
  check_against_exact(PartitionFunctionTag::regular(16), 6, 30000);
}

TEST_CASE("packed-bit and byte paths are mutually consistent") {
  const std::size_t N = 200000;
  PartitionFunctionTag tag = PartitionFunctionTag::regular(13);
  FastSeries bits = build_tag_mod(tag, 2, N);
  FastSeries bytes = build_tag_mod(tag, 6, N);
  for (std::size_t n = 0; n <= N; ++n)
    if (bits.residue(n) != bytes.residue(n) % 2) {
      CAPTURE(n);
      REQUIRE(bits.residue(n) == bytes.residue(n) % 2);
    }
  CHECK(bits.residue(N) == bytes.residue(N) % 2);
}

TEST_CASE("eta factor shapes per tag") {
  EtaFactors p = eta_factors_for_tag(PartitionFunctionTag::p());
  CHECK(p.num.empty());
  CHECK(p.den == std::vector<std::uint32_t>{1});

  EtaFactors b5 = eta_factors_for_tag(PartitionFunctionTag::regular(5));
  CHECK(b5.num == std::vector<std::uint32_t>{5});
  CHECK(b5.den == std::vector<std::uint32_t>{1});

  EtaFactors bp7 = eta_factors_for_tag(PartitionFunctionTag::distinct_regular(7));
  std::vector<std::uint32_t> num = bp7.num, den = bp7.den;
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  CHECK(num == std::vector<std::uint32_t>{2, 7});
  CHECK(den == std::vector<std::uint32_t>{1, 14});
}

TEST_CASE("fast builder validation") {
  PartitionFunctionTag tag = PartitionFunctionTag::p();
  CHECK_THROWS_AS(build_tag_mod(tag, 1, 100), Error);
  CHECK_THROWS_AS(build_tag_mod(tag, 0, 100), Error);
  CHECK_THROWS_AS(build_tag_mod(tag, 256, 100), Error);
  FastSeries f = build_tag_mod(tag, 3, 100);
  CHECK_THROWS_AS(f.residue(101), Error);
}
