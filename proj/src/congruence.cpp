#include "regulus/congruence.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "regulus/fastseries.hpp"

namespace regulus {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kClaimRangeLimit = 1ull << 62;
constexpr std::size_t kDefaultCapMod2 = 8000000;
constexpr std::size_t kDefaultCapSmall = 2000000;
constexpr std::size_t kHardCeilingMod2 = 1ull << 28;
constexpr std::size_t kHardCeilingSmall = 1ull << 26;

void require(bool cond, const std::string& msg) {
  if (!cond) fail_validation(msg);
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp,
                      const std::string& who) {
  u128 r = 1;
  for (std::uint32_t e = 0; e < exp; ++e) {
    r *= base;
    if (r > kClaimRangeLimit)
      fail_validation(who + ": parameters produce a progression beyond the "
                      "engine's 64-bit range");
  }
  return static_cast<std::uint64_t>(r);
}

// (num_product - sub) / den with exact-divisibility assertion; all catalog
// offsets are integral when the hypotheses hold, so a remainder here means a
// transcription bug, not bad user input.
std::uint64_t offset_div(u128 num, std::uint64_t sub, std::uint64_t den,
                         const std::string& who) {
  if (num < sub || (num - sub) % den != 0)
    fail_validation("internal error: non-integral progression offset in " +
                    who);
  u128 q = (num - sub) / den;
  if (q > kClaimRangeLimit)
    fail_validation(who + ": offset beyond the engine's 64-bit range");
  return static_cast<std::uint64_t>(q);
}

std::int64_t tri(std::int64_t x) { return x * (x + 1) / 2; }
std::int64_t pent(std::int64_t x) { return x * (3 * x + 1) / 2; }

std::uint32_t mod_p(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// The unique integral element of {(p-1)/6, -(p+1)/6} for p == +-1 mod 6.
int special_pent_index(std::uint32_t p) {
  if ((p - 1) % 6 == 0) return static_cast<int>((p - 1) / 6);
  return -static_cast<int>((p + 1) / 6);
}

struct FamilyContext {
  const FamilyParams& params;
  std::vector<CongruenceClaim> claims;

  void emit(PartitionFunctionTag tag, std::uint64_t A, std::uint64_t B,
            std::uint32_t m, std::string origin) {
    claims.push_back({tag, A, B, m, std::move(origin)});
  }
};

std::uint32_t need_prime(const std::optional<std::uint32_t>& p,
                         std::uint32_t min, const std::string& id) {
  require(p.has_value(), id + ": parameter p is required");
  require(is_prime_u32(*p) && *p >= min,
          id + ": p must be a prime >= " + std::to_string(min) + ", got " +
              std::to_string(*p));
  return *p;
}

std::uint32_t need_alpha(const std::optional<std::uint32_t>& alpha,
                         std::uint32_t min, const std::string& id) {
  require(alpha.has_value(), id + ": parameter alpha is required");
  require(*alpha >= min, id + ": alpha must be >= " + std::to_string(min) +
                             ", got " + std::to_string(*alpha));
  return *alpha;
}

std::vector<std::uint32_t> index_range(const std::optional<std::uint32_t>& idx,
                                       std::uint32_t lo, std::uint32_t hi,
                                       const std::string& id,
                                       const std::string& name) {
  if (idx) {
    require(*idx >= lo && *idx <= hi,
            id + ": " + name + " must lie in [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "], got " + std::to_string(*idx));
    return {*idx};
  }
  std::vector<std::uint32_t> all;
  for (std::uint32_t v = lo; v <= hi; ++v) all.push_back(v);
  return all;
}

std::vector<std::uint32_t> admissible_range(
    const std::optional<std::uint32_t>& idx, std::uint32_t c, std::uint32_t p,
    const std::string& id, const std::string& name) {
  if (idx) {
    require(*idx < p, id + ": " + name + " must lie in [0, p-1]");
    require(legendre(static_cast<std::int64_t>(c) * *idx + 1, p) == -1,
            id + ": " + name + " = " + std::to_string(*idx) +
                " is not admissible (" + std::to_string(c) + "*" + name +
                "+1 must be a quadratic nonresidue mod p)");
    return {*idx};
  }
  std::vector<std::uint32_t> all;
  for (std::uint32_t j = 0; j < p; ++j)
    if (legendre(static_cast<std::int64_t>(c) * j + 1, p) == -1)
      all.push_back(j);
  return all;
}

std::vector<std::uint32_t> need_primes(const FamilyParams& params,
                                       std::uint32_t min,
                                       const std::string& id) {
  require(!params.primes.empty(), id + ": parameter primes is required");
  for (std::uint32_t p : params.primes)
    require(is_prime_u32(p) && p >= min,
            id + ": every entry of primes must be a prime >= " +
                std::to_string(min) + ", got " + std::to_string(p));
  return params.primes;
}

std::string primes_str(const std::vector<std::uint32_t>& ps) {
  std::ostringstream os;
  for (std::size_t s = 0; s < ps.size(); ++s) {
    if (s) os << "*";
    os << ps[s];
  }
  return os.str();
}

// ---- individual families ----

void fam_b2b4_even_i(FamilyContext& ctx, const std::string& id,
                     std::uint32_t ell, std::uint32_t pmin, std::uint32_t c) {
  std::uint32_t p = need_prime(ctx.params.p, pmin, id);
  if (pmin == 3) require(p % 2 == 1, id + ": p must be odd");
  std::uint32_t a = need_alpha(ctx.params.alpha, 1, id);
  std::uint64_t A = pow_u64(p, 2 * a, id);
  std::uint64_t pw = pow_u64(p, 2 * a - 1, id);
  for (std::uint32_t i : index_range(ctx.params.index, 1, p - 1, id, "i")) {
    std::uint64_t B =
        offset_div(u128(c) * i * pw + u128(p) * pw, 1, c, id);
    std::ostringstream os;
    os << id << "(p=" << p << ",alpha=" << a << ",i=" << i << ")";
    ctx.emit(PartitionFunctionTag::regular(ell), A, B, 2, os.str());
  }
}

void fam_b2b4_even_j(FamilyContext& ctx, const std::string& id,
                     std::uint32_t ell, std::uint32_t pmin, std::uint32_t c) {
  std::uint32_t p = need_prime(ctx.params.p, pmin, id);
  if (pmin == 3) require(p % 2 == 1, id + ": p must be odd");
  std::uint32_t a = need_alpha(ctx.params.alpha, 0, id);
  std::uint64_t A = pow_u64(p, 2 * a + 1, id);
  std::uint64_t pw = pow_u64(p, 2 * a, id);
  for (std::uint32_t j : admissible_range(ctx.params.index, c, p, id, "j")) {
    std::uint64_t B = offset_div(u128(c) * j * pw + pw, 1, c, id);
    std::ostringstream os;
    os << id << "(p=" << p << ",alpha=" << a << ",j=" << j << ")";
    ctx.emit(PartitionFunctionTag::regular(ell), A, B, 2, os.str());
  }
}

void fam_multiprime_i(FamilyContext& ctx, const std::string& id,
                      std::uint32_t ell, std::uint32_t pmin, std::uint32_t c) {
  auto ps = need_primes(ctx.params, pmin, id);
  std::uint32_t pr = ps.back();
  u128 lead = 1, A128 = 1;
  for (std::uint32_t q : ps) A128 *= u128(q) * q;
  for (std::size_t s = 0; s + 1 < ps.size(); ++s) lead *= u128(ps[s]) * ps[s];
  require(A128 <= kClaimRangeLimit, id + ": prime product out of range");
  std::uint64_t A = static_cast<std::uint64_t>(A128);
  for (std::uint32_t i : index_range(ctx.params.index, 1, pr - 1, id, "i")) {
    std::uint64_t B = offset_div((u128(c) * i + pr) * lead * pr, 1, c, id);
    std::ostringstream os;
    os << id << "(primes=" << primes_str(ps) << ",i=" << i << ")";
    ctx.emit(PartitionFunctionTag::regular(ell), A, B, 2, os.str());
  }
}

void fam_multiprime_j(FamilyContext& ctx, const std::string& id,
                      std::uint32_t ell, std::uint32_t pmin, std::uint32_t c) {
  auto ps = need_primes(ctx.params, pmin, id);
  std::uint32_t pr = ps.back();
  u128 lead = 1;
  for (std::size_t s = 0; s + 1 < ps.size(); ++s) lead *= u128(ps[s]) * ps[s];
  u128 A128 = lead * pr;
  require(A128 <= kClaimRangeLimit, id + ": prime product out of range");
  std::uint64_t A = static_cast<std::uint64_t>(A128);
  for (std::uint32_t j : admissible_range(ctx.params.index, c, pr, id, "j")) {
    std::uint64_t B = offset_div((u128(c) * j + 1) * lead, 1, c, id);
    std::ostringstream os;
    os << id << "(primes=" << primes_str(ps) << ",j=" << j << ")";
    ctx.emit(PartitionFunctionTag::regular(ell), A, B, 2, os.str());
  }
}

void fam_ped3(FamilyContext& ctx) {
  const std::string id = "ped-3";
  std::uint32_t a = need_alpha(ctx.params.alpha, 0, id);
  struct Row { std::uint32_t apow, mult, mpow; };
  // 3^{apow} n + (mult * 3^{mpow} - 1)/8
  const Row rows[] = {{2 * a + 1, 17, 2 * a},
                      {2 * a + 2, 11, 2 * a + 1},
                      {2 * a + 2, 19, 2 * a + 1}};
  auto which = index_range(ctx.params.index, 1, 3, id, "index");
  for (std::uint32_t w : which) {
    const Row& r = rows[w - 1];
    std::uint64_t A = pow_u64(3, r.apow, id);
    std::uint64_t B =
        offset_div(u128(r.mult) * pow_u64(3, r.mpow, id), 1, 8, id);
    std::ostringstream os;
    os << id << "#" << w << "(alpha=" << a << ")";
    ctx.emit(PartitionFunctionTag::regular(4), A, B, 2, os.str());
  }
}

void fam_b13_even_i(FamilyContext& ctx) {
  const std::string id = "b13-even-i";
  std::uint32_t p = need_prime(ctx.params.p, 3, id);
  std::uint32_t a = need_alpha(ctx.params.alpha, 0, id);
  std::uint64_t A = 4 * pow_u64(p, 2 * a + 2, id);
  std::uint64_t pw = pow_u64(p, 2 * a + 1, id);
  for (std::uint32_t i : index_range(ctx.params.index, 1, p - 1, id, "i")) {
    std::uint64_t B = offset_div((u128(8) * i + p) * pw, 1, 2, id);
    std::ostringstream os;
    os << id << "(p=" << p << ",alpha=" << a << ",i=" << i << ")";
    ctx.emit(PartitionFunctionTag::regular(13), A, B, 2, os.str());
  }
}

void fam_b13_even_j(FamilyContext& ctx) {
  const std::string id = "b13-even-j";
  std::uint32_t p = need_prime(ctx.params.p, 3, id);
  std::uint32_t a = need_alpha(ctx.params.alpha, 0, id);
  std::uint64_t A = 4 * pow_u64(p, 2 * a + 1, id);
  std::uint64_t pw = pow_u64(p, 2 * a, id);
  for (std::uint32_t j : admissible_range(ctx.params.index, 8, p, id, "j")) {
    std::uint64_t B = offset_div((u128(8) * j + 1) * pw, 1, 2, id);
    std::ostringstream os;
    os << id << "(p=" << p << ",alpha=" << a << ",j=" << j << ")";
    ctx.emit(PartitionFunctionTag::regular(13), A, B, 2, os.str());
  }
}

void fam_b13_mod3(FamilyContext& ctx) {
  const std::string id = "b13-mod3";
  std::uint32_t l = need_alpha(ctx.params.alpha, 2, id);  // alpha carries l
  std::uint64_t A = pow_u64(3, l, id);
  std::uint64_t B = offset_div(u128(5) * pow_u64(3, l - 1, id), 1, 2, id);
  std::ostringstream os;
  os << id << "(l=" << l << ")";
  ctx.emit(PartitionFunctionTag::regular(13), A, B, 3, os.str());
}

void fam_b13_mod6(FamilyContext& ctx) {
  const std::string id = "b13-mod6";
  std::uint32_t a = need_alpha(ctx.params.alpha, 1, id);
  auto which = index_range(ctx.params.index, 1, 2, id, "index");
  for (std::uint32_t w : which) {
    std::uint64_t A, B;
    if (w == 1) {
      A = 4 * pow_u64(3, 2 * a + 1, id);
      B = offset_div(u128(17) * pow_u64(3, 2 * a, id), 1, 2, id);
    } else {
      A = 4 * pow_u64(3, 2 * a, id);
      B = offset_div(u128(11) * pow_u64(3, 2 * a - 1, id), 1, 2, id);
    }
    std::ostringstream os;
    os << id << "#" << w << "(alpha=" << a << ")";
    ctx.emit(PartitionFunctionTag::regular(13), A, B, 6, os.str());
  }
}

void fam_b5_calkin(FamilyContext& ctx) {
  auto which = index_range(ctx.params.index, 1, 2, "b5-even-calkin", "index");
  for (std::uint32_t w : which)
    ctx.emit(PartitionFunctionTag::regular(5), 20, w == 1 ? 5 : 13, 2,
             "b5-even-calkin#" + std::to_string(w));
}

void fam_b5_even_i(FamilyContext& ctx, const std::string& id,
                   std::uint32_t alpha_min) {
  std::uint32_t p = need_prime(ctx.params.p, 5, id);
  require(legendre(-10, p) == -1,
          id + ": requires -10 to be a quadratic nonresidue mod p");
  std::uint32_t a = alpha_min == 0 ? 1  // b5-even-HS pins alpha = 1
                                   : need_alpha(ctx.params.alpha, 1, id);
  std::uint64_t A = 4 * pow_u64(p, 2 * a, id);
  std::uint64_t pw = pow_u64(p, 2 * a - 1, id);
  for (std::uint32_t i : index_range(ctx.params.index, 1, p - 1, id, "i")) {
    std::uint64_t B = offset_div((u128(24) * i + u128(7) * p) * pw, 1, 6, id);
    std::ostringstream os;
    os << id << "(p=" << p;
    if (alpha_min != 0) os << ",alpha=" << a;
    os << ",i=" << i << ")";
    ctx.emit(PartitionFunctionTag::regular(5), A, B, 2, os.str());
  }
}

void fam_b5_5power(FamilyContext& ctx) {
  const std::string id = "b5-even-5power";
  std::uint32_t a = need_alpha(ctx.params.alpha, 0, id);
  struct Row { std::uint32_t apow, mult, mpow; };
  // 4*5^{apow} n + (mult*5^{mpow} - 1)/6
  const Row rows[] = {{2 * a + 1, 31, 2 * a},
                      {2 * a + 1, 79, 2 * a},
                      {2 * a + 2, 83, 2 * a + 1},
                      {2 * a + 2, 107, 2 * a + 1}};
  for (std::uint32_t w : index_range(ctx.params.index, 1, 4, id, "index")) {
    const Row& r = rows[w - 1];
    std::uint64_t A = 4 * pow_u64(5, r.apow, id);
    std::uint64_t B =
        offset_div(u128(r.mult) * pow_u64(5, r.mpow, id), 1, 6, id);
    std::ostringstream os;
    os << id << "#" << w << "(alpha=" << a << ")";
    ctx.emit(PartitionFunctionTag::regular(5), A, B, 2, os.str());
  }
}

void fam_b8_even_i(FamilyContext& ctx) {
  const std::string id = "b8-even-i";
  std::uint32_t p = need_prime(ctx.params.p, 5, id);
  require(p % 6 == 5, id + ": requires p == -1 (mod 6)");
  std::uint32_t a = need_alpha(ctx.params.alpha, 1, id);
  std::uint64_t A = pow_u64(p, 2 * a, id);
  std::uint64_t pw = pow_u64(p, 2 * a - 1, id);
  for (std::uint32_t i : index_range(ctx.params.index, 1, p - 1, id, "i")) {
    std::uint64_t B = offset_div((u128(24) * i + u128(7) * p) * pw, 7, 24, id);
    std::ostringstream os;
    os << id << "(p=" << p << ",alpha=" << a << ",i=" << i << ")";
    ctx.emit(PartitionFunctionTag::regular(8), A, B, 2, os.str());
  }
}

void fam_b16_even_i(FamilyContext& ctx) {
  const std::string id = "b16-even-i";
  std::uint32_t p = need_prime(ctx.params.p, 3, id);
  require(p % 4 == 3, id + ": requires p == -1 (mod 4)");
  std::uint32_t a = need_alpha(ctx.params.alpha, 0, id);
  std::uint64_t A = pow_u64(p, 2 * a + 2, id);
  std::uint64_t pw = pow_u64(p, 2 * a + 1, id);
  for (std::uint32_t i : index_range(ctx.params.index, 1, p - 1, id, "i")) {
    std::uint64_t B = offset_div((u128(8) * i + u128(5) * p) * pw, 5, 8, id);
    std::ostringstream os;
    os << id << "(p=" << p << ",alpha=" << a << ",i=" << i << ")";
    ctx.emit(PartitionFunctionTag::regular(16), A, B, 2, os.str());
  }
}

void fam_ramanujan_lift(FamilyContext& ctx) {
  const std::string id = "ramanujan-lift";
  require(ctx.params.k.has_value(), id + ": parameter k is required");
  std::uint32_t k = *ctx.params.k;
  require(k >= 1, id + ": k must be >= 1");
  struct Row { std::uint32_t base, A, B, m; };
  const Row rows[] = {{5, 5, 4, 5},
                      {7, 7, 5, 7},
                      {11, 11, 6, 11},
                      {25, 25, 24, 25},
                      {49, 49, 47, 49}};
  for (std::uint32_t w : index_range(ctx.params.index, 1, 5, id, "index")) {
    const Row& r = rows[w - 1];
    u128 ell = u128(r.base) * k;
    require(ell <= 0xffffffffu && ell >= 2, id + ": base*k out of range");
    std::ostringstream os;
    os << id << "#" << w << "(k=" << k << ")";
    ctx.emit(PartitionFunctionTag::regular(static_cast<std::uint32_t>(ell)),
             r.A, r.B, r.m, os.str());
  }
}

void fam_combined4(FamilyContext& ctx) {
  const std::string id = "combined-4";
  auto which = index_range(ctx.params.index, 1, 13, id, "index");
  bool any_alpha = false;
  for (std::uint32_t w : which) any_alpha = any_alpha || w <= 10;
  std::uint32_t a = any_alpha ? need_alpha(ctx.params.alpha, 0, id) : 0;
  for (std::uint32_t w : which) {
    PartitionFunctionTag tag = PartitionFunctionTag::regular(5);
    std::uint64_t A = 0, B = 0;
    std::uint32_t m = 0;
    switch (w) {
      case 1:  // flagged: fails at alpha = 0, proven for alpha >= 1
        A = 4 * pow_u64(5, 2 * a + 2, id);
        B = offset_div(u128(31) * pow_u64(5, 2 * a, id), 1, 6, id);
        m = 10;
        break;
      case 2:  // flagged: fails at alpha = 0, proven for alpha >= 1
        A = 4 * pow_u64(5, 2 * a + 2, id);
        B = offset_div(u128(79) * pow_u64(5, 2 * a, id), 1, 6, id);
        m = 10;
        break;
      case 3:
        A = 4 * pow_u64(5, 2 * a + 3, id);
        B = offset_div(u128(83) * pow_u64(5, 2 * a + 1, id), 1, 6, id);
        m = 10;
        break;
      case 4:
        A = 4 * pow_u64(5, 2 * a + 3, id);
        B = offset_div(u128(107) * pow_u64(5, 2 * a + 1, id), 1, 6, id);
        m = 10;
        break;
      case 5:
        tag = PartitionFunctionTag::regular(7);
        A = 7 * pow_u64(3, 2 * a + 2, id);
        B = offset_div(u128(35) * pow_u64(3, 2 * a + 1, id), 1, 4, id);
        m = 21;
        break;
      case 6:
        tag = PartitionFunctionTag::regular(7);
        A = 7 * pow_u64(3, 2 * a + 3, id);
        B = offset_div(u128(77) * pow_u64(3, 2 * a + 2, id), 1, 4, id);
        m = 21;
        break;
      case 7:
        tag = PartitionFunctionTag::regular(25);
        A = 5 * pow_u64(3, 2 * a + 3, id);
        B = 5 * pow_u64(3, 2 * a + 2, id) - 1;
        m = 15;
        break;
      case 8:
        tag = PartitionFunctionTag::regular(25);
        A = 25 * pow_u64(3, 2 * a + 3, id);
        B = 50 * pow_u64(3, 2 * a + 2, id) - 1;
        m = 75;
        break;
      case 9:
        tag = PartitionFunctionTag::regular(49);
        A = 7 * pow_u64(3, 3 * a + 3, id);
        B = 14 * pow_u64(3, 3 * a + 2, id) - 2;
        m = 21;
        break;
      case 10:
        tag = PartitionFunctionTag::regular(49);
        A = 49 * pow_u64(3, 3 * a + 3, id);
        B = 98 * pow_u64(3, 3 * a + 2, id) - 2;
        m = 147;
        break;
      case 11:
        tag = PartitionFunctionTag::regular(10);
        A = 45; B = 39; m = 15;
        break;
      case 12:
        tag = PartitionFunctionTag::regular(22);
        A = 297; B = 259; m = 33;
        break;
      case 13:
        tag = PartitionFunctionTag::regular(28);
        A = 189; B = 117; m = 21;
        break;
    }
    std::ostringstream os;
    os << id << "#f" << w;
    if (w <= 10) os << "(alpha=" << a << ")";
    ctx.emit(tag, A, B, m, os.str());
  }
}

void fam_fp_mod3(FamilyContext& ctx) {
  const std::string id = "fp-mod3";
  struct Row {
    std::uint32_t ell;
    std::uint32_t astep, apow;   // A = 3^{astep*a + apow}
    std::uint32_t mult, mpow;    // numerator mult * 3^{astep*a + mpow}
    std::uint32_t sub, den;      // B = (num - sub)/den
  };
  const Row rows[] = {
      {7, 2, 2, 11, 1, 1, 4},  {7, 2, 3, 5, 2, 1, 4},
      {19, 2, 4, 5, 3, 3, 4},  {19, 2, 5, 11, 4, 3, 4},
      {25, 2, 3, 2, 2, 1, 1},  {34, 4, 3, 19, 2, 11, 8},
      {34, 4, 5, 11, 4, 11, 8}, {37, 3, 3, 1, 2, 3, 2},
      {43, 2, 4, 5, 3, 7, 4},  {43, 2, 5, 11, 4, 7, 4},
      {49, 3, 3, 2, 2, 2, 1}};
  auto which = index_range(ctx.params.index, 1, 14, id, "index");
  bool any_alpha = false;
  for (std::uint32_t w : which) any_alpha = any_alpha || w <= 11;
  std::uint32_t a = any_alpha ? need_alpha(ctx.params.alpha, 0, id) : 0;
  for (std::uint32_t w : which) {
    std::uint64_t A, B;
    std::uint32_t ell;
    if (w <= 11) {
      const Row& r = rows[w - 1];
      ell = r.ell;
      A = pow_u64(3, r.astep * a + r.apow, id);
      B = offset_div(u128(r.mult) * pow_u64(3, r.astep * a + r.mpow, id),
                     r.sub, r.den, id);
    } else if (w == 12) {
      ell = 10; A = 9; B = 3;
    } else if (w == 13) {
      ell = 22; A = 27; B = 16;
    } else {
      ell = 28; A = 27; B = 9;
    }
    std::ostringstream os;
    os << id << "#" << w;
    if (w <= 11) os << "(alpha=" << a << ")";
    ctx.emit(PartitionFunctionTag::regular(ell), A, B, 3, os.str());
  }
}

void fam_sellers(FamilyContext& ctx) {
  const std::string id = "sellers-parity";
  std::uint32_t p = need_prime(ctx.params.p, 5, id);
  for (std::uint32_t r : admissible_range(ctx.params.index, 24, p, id, "r")) {
    require(r >= 1, id + ": r must lie in [1, p-1]");
    std::ostringstream os;
    os << id << "(p=" << p << ",r=" << r << ")";
    ctx.emit(PartitionFunctionTag::distinct_regular(p), p, r, 2, os.str());
  }
}

}  // namespace

int legendre(std::int64_t a, std::uint32_t p) {
  if (p < 3 || !is_prime_u32(p))
    fail_validation("legendre requires an odd prime, got " +
                    std::to_string(p));
  mpz_class az, pz;
  az = static_cast<long>(a);
  pz = static_cast<unsigned long>(p);
  return mpz_legendre(az.get_mpz_t(), pz.get_mpz_t());
}

std::vector<CongruenceClaim> family_claims(const FamilyParams& params) {
  FamilyContext ctx{params, {}};
  const std::string& id = params.catalog_id;
  if (id == "b2-even-i") fam_b2b4_even_i(ctx, id, 2, 5, 24);
  else if (id == "b2-even-j") fam_b2b4_even_j(ctx, id, 2, 5, 24);
  else if (id == "b2-multiprime-i") fam_multiprime_i(ctx, id, 2, 5, 24);
  else if (id == "b2-multiprime-j") fam_multiprime_j(ctx, id, 2, 5, 24);
  else if (id == "b4-even-i") fam_b2b4_even_i(ctx, id, 4, 3, 8);
  else if (id == "b4-even-j") fam_b2b4_even_j(ctx, id, 4, 3, 8);
  else if (id == "b4-multiprime-i") fam_multiprime_i(ctx, id, 4, 3, 8);
  else if (id == "b4-multiprime-j") fam_multiprime_j(ctx, id, 4, 3, 8);
  else if (id == "ped-3") fam_ped3(ctx);
  else if (id == "b13-even-i") fam_b13_even_i(ctx);
  else if (id == "b13-even-j") fam_b13_even_j(ctx);
  else if (id == "b13-mod3") fam_b13_mod3(ctx);
  else if (id == "b13-mod6") fam_b13_mod6(ctx);
  else if (id == "b5-even-calkin") fam_b5_calkin(ctx);
  else if (id == "b5-even-i") fam_b5_even_i(ctx, id, 1);
  else if (id == "b5-even-HS") fam_b5_even_i(ctx, id, 0);
  else if (id == "b5-even-5power") fam_b5_5power(ctx);
  else if (id == "b8-even-i") fam_b8_even_i(ctx);
  else if (id == "b16-even-i") fam_b16_even_i(ctx);
  else if (id == "ramanujan-lift") fam_ramanujan_lift(ctx);
  else if (id == "combined-4") fam_combined4(ctx);
  else if (id == "fp-mod3") fam_fp_mod3(ctx);
  else if (id == "sellers-parity") fam_sellers(ctx);
  else fail_validation("unknown catalog id: " + id);
  return std::move(ctx.claims);
}

std::vector<ScanResult> verify_claims(const std::vector<CongruenceClaim>& claims,
                                      const ScanOptions& options) {
  require(options.n_count >= 1, "verify: n_count must be >= 1");
  struct GroupKey {
    PartitionFunctionTag tag;
    std::uint32_t m;
    bool operator<(const GroupKey& o) const {
      if (!(tag == o.tag)) return tag < o.tag;
      return m < o.m;
    }
  };
  struct GroupPlan {
    u128 need_full = 0;
    std::uint64_t max_b = 0;
  };
  std::map<GroupKey, GroupPlan> plans;
  for (const CongruenceClaim& c : claims) {
    require(c.A >= 1, "verify: claim has A = 0 (" + c.origin + ")");
    require(c.m >= 2 && c.m <= 255,
            "verify: modulus must lie in [2, 255] (" + c.origin + ")");
    GroupPlan& g = plans[{c.function, c.m}];
    u128 need = u128(c.A) * (options.n_count - 1) + c.B;
    g.need_full = std::max(g.need_full, need);
    g.max_b = std::max(g.max_b, c.B);
  }

  std::map<GroupKey, FastSeries> tables;
  for (auto& [key, plan] : plans) {
    u128 trunc;
    if (options.explicit_cap) {
      trunc = std::min<u128>(plan.need_full, options.max_truncation);
    } else {
      std::size_t cap = key.m == 2 ? kDefaultCapMod2 : kDefaultCapSmall;
      trunc = std::min<u128>(plan.need_full,
                             std::max<u128>(cap, plan.max_b));
    }
    std::size_t ceiling = key.m == 2 ? kHardCeilingMod2 : kHardCeilingSmall;
    if (trunc > ceiling)
      fail_resource("verification of " + key.tag.name() + " mod " +
                    std::to_string(key.m) + " needs a series of length " +
                    std::to_string(static_cast<std::uint64_t>(trunc)) +
                    ", beyond the engine ceiling " + std::to_string(ceiling));
    tables.emplace(key, build_tag_mod(key.tag, key.m,
                                      static_cast<std::size_t>(trunc)));
  }

  std::vector<ScanResult> out;
  out.reserve(claims.size());
  for (const CongruenceClaim& c : claims) {
    const FastSeries& fs = tables.at({c.function, c.m});
    const std::uint64_t trunc = fs.truncation();
    ScanResult r;
    r.claim = c;
    r.n_requested = options.n_count;
    if (c.B > trunc) {
      fail_resource("claim " + c.origin + " has offset " + std::to_string(c.B) +
                    " beyond the truncation cap " + std::to_string(trunc) +
                    "; no points can be checked");
    }
    std::uint64_t n_eff = (trunc - c.B) / c.A + 1;
    n_eff = std::min<std::uint64_t>(n_eff, options.n_count);
    r.verified = true;
    for (std::uint64_t n = 0; n < n_eff; ++n) {
      std::uint64_t arg = c.B + c.A * n;
      std::uint32_t v = fs.residue(arg);
      if (v == 0) continue;
      r.verified = false;
      r.counter_n = n;
      r.counter_argument = arg;
      r.counter_value = v;
      r.n_checked = n + 1;
      if (arg <= 60) {
        mpz_class ev = enumerate_tag(c.function, arg);
        mpz_class em = ev % c.m;
        if (em.get_ui() != v)
          fail_validation("internal error: enumeration disagrees with the "
                          "series table at " + c.function.name() + "(" +
                          std::to_string(arg) + ")");
        r.enumeration_confirmed = true;
      }
      if (arg <= options.exact_confirm_cap) {
        Series exact = series_for_tag(c.function,
                                      static_cast<std::size_t>(arg), 0);
        mpz_class ev = exact.coeff(arg);
        mpz_class em = ev % c.m;
        if (em.get_ui() != v)
          fail_validation("internal error: exact recomputation disagrees "
                          "with the series table at " + c.function.name() +
                          "(" + std::to_string(arg) + ")");
        r.exact_confirmed = true;
        r.counter_exact = ev.get_str();
      }
      break;
    }
    if (r.verified) {
      r.n_checked = n_eff;
      r.capped = n_eff < options.n_count;
    }
    out.push_back(std::move(r));
  }
  return out;
}

ScanResult verify_claim(const CongruenceClaim& claim,
                        const ScanOptions& options) {
  return verify_claims({claim}, options)[0];
}

std::vector<std::uint32_t> admissible_j(const std::string& catalog_id,
                                        std::uint32_t p) {
  std::uint32_t c;
  std::uint32_t pmin;
  if (catalog_id == "b2-even-j" || catalog_id == "b2-multiprime-j" ||
      catalog_id == "sellers-parity") {
    c = 24; pmin = 5;
  } else if (catalog_id == "b4-even-j" || catalog_id == "b4-multiprime-j" ||
             catalog_id == "b13-even-j") {
    c = 8; pmin = 3;
  } else {
    fail_validation("admissible_j: catalog id " + catalog_id +
                    " has no admissibility condition");
  }
  if (!is_prime_u32(p) || p < pmin)
    fail_validation("admissible_j: p must be a prime >= " +
                    std::to_string(pmin));
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < p; ++j)
    if (legendre(static_cast<std::int64_t>(c) * j + 1, p) == -1)
      out.push_back(j);
  return out;
}

namespace {

CoverReport cover_impl(std::uint32_t p, const char* what,
                       std::int64_t (*f)(std::int64_t),
                       std::int64_t (*g)(std::int64_t), std::int64_t cf,
                       std::int64_t cg) {
  CoverReport rep;
  rep.prime = p;
  std::vector<bool> hit(p, false);
  for (std::int64_t k = 0; k < p; ++k)
    for (std::int64_t m = 0; m < p; ++m)
      hit[mod_p(cf * f(k) + cg * g(m), p)] = true;
  for (std::uint32_t j = 0; j < p; ++j)
    if (!hit[j]) rep.missing.push_back(j);
  rep.pass = rep.missing.empty();
  std::ostringstream os;
  os << what << " mod " << p << ": "
     << (rep.pass ? "attains every residue class"
                  : std::to_string(rep.missing.size()) +
                        " residue classes unattained");
  rep.detail = os.str();
  return rep;
}

}  // namespace

CoverReport kmj_cover_check(std::uint32_t p) {
  if (!is_prime_u32(p) || p < 5)
    fail_validation("kmj_cover_check: p must be a prime >= 5");
  if (legendre(-10, p) != -1)
    fail_validation("kmj_cover_check: requires -10 to be a quadratic "
                    "nonresidue mod p");
  return cover_impl(p, "2P(k)+5P(m)", pent, pent, 2, 5);
}

CoverReport b8_cover_check(std::uint32_t p) {
  if (!is_prime_u32(p) || p % 6 != 5)
    fail_validation("b8_cover_check: p must be a prime == -1 (mod 6)");
  return cover_impl(p, "T(k)+4P(m)", tri, pent, 1, 4);
}

CoverReport b16_cover_check(std::uint32_t p) {
  if (!is_prime_u32(p) || p % 4 != 3)
    fail_validation("b16_cover_check: p must be a prime == -1 (mod 4)");
  return cover_impl(p, "T(k)+4T(m)", tri, tri, 1, 4);
}

UniquenessReport b5_uniqueness_check(std::uint32_t p) {
  if (!is_prime_u32(p) || p < 5)
    fail_validation("b5_uniqueness_check: p must be a prime >= 5");
  if (legendre(-10, p) != -1)
    fail_validation("b5_uniqueness_check: requires -10 to be a quadratic "
                    "nonresidue mod p");
  UniquenessReport rep;
  rep.prime = p;
  const int h = static_cast<int>((p - 1) / 2);
  const int ks = special_pent_index(p);
  const std::uint32_t target =
      mod_p(7 * ((static_cast<std::int64_t>(p) * p - 1) / 24), p);
  bool special_found = false;
  for (int k = -h; k <= h; ++k)
    for (int m = -h; m <= h; ++m)
      if (mod_p(2 * pent(k) + 5 * pent(m), p) == target) {
        ++rep.solutions;
        if (k == ks && m == ks) special_found = true;
      }
  rep.pass = (rep.solutions == 1) && special_found;
  std::ostringstream os;
  os << "2P(k)+5P(m) == 7(p^2-1)/24 mod " << p << ": " << rep.solutions
     << " solution(s); expected only k = m = " << ks;
  rep.detail = os.str();
  return rep;
}

UniquenessReport b8_uniqueness_check(std::uint32_t p) {
  if (!is_prime_u32(p) || p % 6 != 5)
    fail_validation("b8_uniqueness_check: p must be a prime == -1 (mod 6)");
  UniquenessReport rep;
  rep.prime = p;
  const int h = static_cast<int>((p - 1) / 2);
  const int ms = special_pent_index(p);
  const std::uint32_t target =
      mod_p(7 * ((static_cast<std::int64_t>(p) * p - 1) / 24), p);
  bool special_found = false;
  for (int k = 0; k <= h; ++k)
    for (int m = -h; m <= h; ++m)
      if (mod_p(tri(k) + 4 * pent(m), p) == target) {
        ++rep.solutions;
        if (k == h && m == ms) special_found = true;
      }
  rep.pass = (rep.solutions == 1) && special_found;
  std::ostringstream os;
  os << "T(k)+4P(m) == 7(p^2-1)/24 mod " << p << ": " << rep.solutions
     << " solution(s); expected only (k, m) = (" << h << ", " << ms << ")";
  rep.detail = os.str();
  return rep;
}

UniquenessReport b16_uniqueness_check(std::uint32_t p) {
  if (!is_prime_u32(p) || p % 4 != 3)
    fail_validation("b16_uniqueness_check: p must be a prime == -1 (mod 4)");
  UniquenessReport rep;
  rep.prime = p;
  const std::uint32_t target =
      mod_p(5 * ((static_cast<std::int64_t>(p) * p - 1) / 8), p);
  const int h = static_cast<int>((p - 1) / 2);
  bool special_found = false;
  for (int k = 0; k < static_cast<int>(p); ++k)
    for (int m = 0; m < static_cast<int>(p); ++m)
      if (mod_p(tri(k) + 4 * tri(m), p) == target) {
        ++rep.solutions;
        if (k == h && m == h) special_found = true;
      }
  rep.pass = (rep.solutions == 1) && special_found;
  std::ostringstream os;
  os << "T(k)+4T(m) == 5(p^2-1)/8 mod " << p << ": " << rep.solutions
     << " solution(s); expected only k = m = " << h;
  rep.detail = os.str();
  return rep;
}

std::vector<ScanResult> search_congruences(const SearchOptions& options) {
  require(options.A_max >= 1, "search: A_max must be >= 1");
  require(options.A_max <= 1000000, "search: A_max must be <= 1000000");
  require(options.n_count >= 1, "search: n_count must be >= 1");
  require(options.m >= 2 && options.m <= 255,
          "search: modulus must lie in [2, 255]");

  u128 need = u128(options.A_max) * options.n_count - 1;
  u128 trunc128;
  if (options.explicit_cap) {
    trunc128 = std::min<u128>(need, options.max_truncation);
  } else {
    std::size_t cap = options.m == 2 ? kDefaultCapMod2 : kDefaultCapSmall;
    trunc128 = std::min<u128>(need, cap);
  }
  std::size_t ceiling = options.m == 2 ? kHardCeilingMod2 : kHardCeilingSmall;
  if (trunc128 > ceiling)
    fail_resource("search needs a series of length " +
                  std::to_string(static_cast<std::uint64_t>(trunc128)) +
                  ", beyond the engine ceiling " + std::to_string(ceiling));
  const std::size_t trunc = static_cast<std::size_t>(trunc128);
  FastSeries fs = build_tag_mod(options.function, options.m, trunc);

  std::vector<ScanResult> hits;
  for (std::uint64_t A = 1; A <= options.A_max; ++A) {
    std::uint64_t b_hi = options.B_max ? std::min(A, options.B_max) : A;
    for (std::uint64_t B = 0; B < b_hi; ++B) {
      if (B > trunc) break;
      std::uint64_t n_eff = std::min<std::uint64_t>(
          (trunc - B) / A + 1, options.n_count);
      if (n_eff == 0) continue;
      bool all_zero = true;
      for (std::uint64_t n = 0; n < n_eff; ++n)
        if (fs.residue(B + A * n) != 0) {
          all_zero = false;
          break;
        }
      if (!all_zero) continue;
      bool subsumed = false;
      for (const ScanResult& h : hits)
        if (A % h.claim.A == 0 && B % h.claim.A == h.claim.B) {
          subsumed = true;
          break;
        }
      if (subsumed) continue;
      ScanResult r;
      r.claim = {options.function, A, B, options.m, "empirical — unproven"};
      r.n_requested = options.n_count;
      r.n_checked = n_eff;
      r.verified = true;
      r.capped = n_eff < options.n_count;
      hits.push_back(std::move(r));
    }
  }
  return hits;
}

}  // namespace regulus
