#include "regulus/fastseries.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace regulus {

namespace {

// Scaled generalized pentagonal taps of E(d) = 1 + sum_{k>=1} (-1)^k
// (q^{d k(3k-1)/2} + q^{d k(3k+1)/2}); the implicit leading 1 is not listed.
// Ascending exponent order.
struct Tap {
  std::uint64_t g;
  int sign;
};

std::vector<Tap> pentagonal_taps(std::uint64_t d, std::uint64_t limit) {
  std::vector<Tap> taps;
  for (std::uint64_t k = 1;; ++k) {
    std::uint64_t g1 = d * (k * (3 * k - 1) / 2);
    if (g1 > limit) break;
    int s = (k % 2 == 0) ? 1 : -1;
    taps.push_back({g1, s});
    std::uint64_t g2 = d * (k * (3 * k + 1) / 2);
    if (g2 <= limit) taps.push_back({g2, s});
  }
  return taps;
}

// ---- byte-array path (3 <= m <= 255) ----

// z <- z * E(d) mod m. One sequential pass per tap into a scratch copy,
// renormalizing with a conditional subtract/add.
void mul_euler_u8(std::vector<std::uint8_t>& z, std::uint32_t d,
                  std::uint32_t m, std::vector<std::uint8_t>& scratch) {
  const std::size_t n1 = z.size();
  scratch.assign(z.begin(), z.end());
  const int mi = static_cast<int>(m);
  for (const Tap& t : pentagonal_taps(d, n1 - 1)) {
    const std::size_t g = static_cast<std::size_t>(t.g);
    const std::uint8_t* src = z.data();
    std::uint8_t* dst = scratch.data() + g;
    const std::size_t cnt = n1 - g;
    if (t.sign > 0) {
      for (std::size_t i = 0; i < cnt; ++i) {
        int v = dst[i] + src[i];
        if (v >= mi) v -= mi;
        dst[i] = static_cast<std::uint8_t>(v);
      }
    } else {
      for (std::size_t i = 0; i < cnt; ++i) {
        int v = dst[i] - src[i];
        if (v < 0) v += mi;
        dst[i] = static_cast<std::uint8_t>(v);
      }
    }
  }
  z.swap(scratch);
}

// z <- z / E(d) mod m, in place, via the recurrence
//   out[n] = in[n] - sum_k sign_k out[n - g_k].
// Blocked: per block, contributions from already-finalized indices stream in
// sequentially per tap (phase A); intra-block contributions scatter forward
// as each position is finalized (phase B). The int32 accumulators defer all
// renormalization to the finalize step.
void div_euler_u8(std::vector<std::uint8_t>& z, std::uint32_t d,
                  std::uint32_t m) {
  const std::size_t n1 = z.size();
  const auto taps = pentagonal_taps(d, n1 - 1);
  constexpr std::size_t L = 32768;
  std::vector<std::int32_t> acc(std::min(L, n1));
  const int mi = static_cast<int>(m);
  for (std::size_t t0 = 0; t0 < n1; t0 += L) {
    const std::size_t B = std::min(L, n1 - t0);
    std::fill(acc.begin(), acc.begin() + B, 0);
    for (const Tap& t : taps) {
      const std::uint64_t g = t.g;
      if (g >= t0 + B) break;
      const std::size_t ilo = (g > t0) ? static_cast<std::size_t>(g - t0) : 0;
      const std::size_t ihi =
          static_cast<std::size_t>(std::min<std::uint64_t>(B, g));
      if (ilo >= ihi) continue;
      const std::uint8_t* src = z.data() + (t0 + ilo - g);
      std::int32_t* a = acc.data() + ilo;
      const std::size_t cnt = ihi - ilo;
      if (t.sign > 0)
        for (std::size_t i = 0; i < cnt; ++i) a[i] -= src[i];
      else
        for (std::size_t i = 0; i < cnt; ++i) a[i] += src[i];
    }
    for (std::size_t i = 0; i < B; ++i) {
      int r = static_cast<int>((z[t0 + i] + acc[i]) % mi);
      if (r < 0) r += mi;
      z[t0 + i] = static_cast<std::uint8_t>(r);
      if (r == 0) continue;
      for (const Tap& t : taps) {
        if (t.g >= B - i) break;
        acc[i + static_cast<std::size_t>(t.g)] += (t.sign > 0) ? -r : r;
      }
    }
  }
}

// ---- packed-bit path (m == 2) ----

std::size_t words_for(std::size_t bits) { return (bits + 63) >> 6; }

void mask_tail(std::vector<std::uint64_t>& w, std::size_t bits) {
  if (bits & 63) w[words_for(bits) - 1] &= (1ull << (bits & 63)) - 1;
}

// dst ^= (src << g) over the first `bits` bit positions.
void xor_shift(std::vector<std::uint64_t>& dst,
               const std::vector<std::uint64_t>& src, std::uint64_t g,
               std::size_t bits) {
  const std::size_t nw = words_for(bits);
  const std::size_t off = static_cast<std::size_t>(g >> 6);
  const unsigned b = static_cast<unsigned>(g & 63);
  if (off >= nw) return;
  const std::uint64_t* s = src.data();
  std::uint64_t* t = dst.data();
  if (b == 0) {
    for (std::size_t j = off; j < nw; ++j) t[j] ^= s[j - off];
  } else {
    t[off] ^= s[0] << b;
    const unsigned rb = 64 - b;
    for (std::size_t j = off + 1; j < nw; ++j)
      t[j] ^= (s[j - off] << b) | (s[j - off - 1] >> rb);
  }
}

// x <- x * E(d) over GF(2) truncated to `bits` (signs vanish mod 2).
void mul_euler_bits(std::vector<std::uint64_t>& x, std::uint32_t d,
                    std::size_t bits, std::vector<std::uint64_t>& scratch) {
  const std::size_t nw = words_for(bits);
  std::copy(x.begin(), x.begin() + nw, scratch.begin());
  for (const Tap& t : pentagonal_taps(d, bits - 1))
    xor_shift(scratch, x, t.g, bits);
  mask_tail(scratch, bits);
  x.swap(scratch);
}

std::array<std::uint16_t, 256> make_spread_table() {
  std::array<std::uint16_t, 256> t{};
  for (int v = 0; v < 256; ++v) {
    std::uint16_t s = 0;
    for (int i = 0; i < 8; ++i)
      if ((v >> i) & 1) s = static_cast<std::uint16_t>(s | (1u << (2 * i)));
    t[v] = s;
  }
  return t;
}

// out = x^2 over GF(2) truncated to `outbits`: bit 2n of out is bit n of x
// (Frobenius), realized by byte-wise bit spreading.
void square_bits(const std::vector<std::uint64_t>& x,
                 std::vector<std::uint64_t>& out, std::size_t outbits) {
  static const std::array<std::uint16_t, 256> SPREAD = make_spread_table();
  const std::size_t now = words_for(outbits);
  const std::size_t srcw = (now + 1) / 2;
  for (std::size_t j = 0; j < srcw; ++j) {
    const std::uint64_t w = x[j];
    out[2 * j] = SPREAD[w & 0xff] |
                 (static_cast<std::uint64_t>(SPREAD[(w >> 8) & 0xff]) << 16) |
                 (static_cast<std::uint64_t>(SPREAD[(w >> 16) & 0xff]) << 32) |
                 (static_cast<std::uint64_t>(SPREAD[(w >> 24) & 0xff]) << 48);
    if (2 * j + 1 < now)
      out[2 * j + 1] =
          SPREAD[(w >> 32) & 0xff] |
          (static_cast<std::uint64_t>(SPREAD[(w >> 40) & 0xff]) << 16) |
          (static_cast<std::uint64_t>(SPREAD[(w >> 48) & 0xff]) << 32) |
          (static_cast<std::uint64_t>(SPREAD[(w >> 56) & 0xff]) << 48);
  }
  mask_tail(out, outbits);
}

// Reciprocal of prod_{d in den} E(d) over GF(2) to `bits` coefficients by
// Newton doubling: if D X == 1 mod q^k then D (D X^2) == (D X)^2 == 1
// mod q^{2k} in characteristic 2.
std::vector<std::uint64_t> newton_inverse_bits(
    const std::vector<std::uint32_t>& den, std::size_t bits) {
  const std::size_t W = words_for(bits);
  std::vector<std::uint64_t> x(W, 0), sq(W, 0), scratch(W, 0);
  x[0] = 1;
  std::size_t k = 1;
  while (k < bits) {
    const std::size_t k2 = std::min(bits, 2 * k);
    square_bits(x, sq, k2);
    x.swap(sq);
    for (std::uint32_t d : den) mul_euler_bits(x, d, k2, scratch);
    k = k2;
  }
  return x;
}

}  // namespace

EtaFactors eta_factors_for_tag(const PartitionFunctionTag& tag) {
  EtaFactors f;
  switch (tag.kind) {
    case PartitionFunctionTag::Kind::unrestricted:
      f.den = {1};
      break;
    case PartitionFunctionTag::Kind::regular:
      f.num = {tag.param};
      f.den = {1};
      break;
    case PartitionFunctionTag::Kind::distinct_regular:
      if (tag.param > 0x7fffffffu)
        fail_validation("distinct-regular prime too large");
      f.num = {2, tag.param};
      f.den = {1, 2 * tag.param};
      break;
  }
  return f;
}

FastSeries build_tag_mod(const PartitionFunctionTag& tag, std::uint32_t m,
                         std::size_t truncation) {
  if (m < 2 || m > 255)
    fail_validation("fast builder supports moduli in [2, 255], got " +
                    std::to_string(m));
  const EtaFactors f = eta_factors_for_tag(tag);
  FastSeries out;
  out.modulus_ = m;
  out.truncation_ = truncation;
  const std::size_t n1 = truncation + 1;
  if (m == 2) {
    std::vector<std::uint64_t> x = newton_inverse_bits(f.den, n1);
    std::vector<std::uint64_t> scratch(words_for(n1), 0);
    for (std::uint32_t d : f.num) mul_euler_bits(x, d, n1, scratch);
    out.bits_ = std::move(x);
  } else {
    std::vector<std::uint8_t> z(n1, 0);
    z[0] = 1;
    std::vector<std::uint8_t> scratch;
    for (std::uint32_t d : f.num) mul_euler_u8(z, d, m, scratch);
    for (std::uint32_t d : f.den) div_euler_u8(z, d, m);
    out.bytes_ = std::move(z);
  }
  return out;
}

}  // namespace regulus
