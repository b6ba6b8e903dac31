#include "regulus/partitions.hpp"

#include <map>
#include <vector>

#include "regulus/theta.hpp"

namespace regulus {

namespace {
constexpr std::size_t kEnumerationGuard = 60;
}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PartitionFunctionTag PartitionFunctionTag::regular(std::uint32_t ell) {
  if (ell < 2) fail_validation("regular tag needs ell >= 2");
  return {Kind::regular, ell};
}

PartitionFunctionTag PartitionFunctionTag::distinct_regular(std::uint32_t prime) {
  if (prime < 5 || !is_prime_u32(prime))
    fail_validation("distinct_regular tag needs a prime >= 5");
  return {Kind::distinct_regular, prime};
}

std::string PartitionFunctionTag::name() const {
  switch (kind) {
    case Kind::unrestricted:
      return "p";
    case Kind::regular:
      return "b_" + std::to_string(param);
    case Kind::distinct_regular:
      return "b'_" + std::to_string(param);
  }
  return "?";
}

PartitionFunctionTag PartitionFunctionTag::parse(const std::string& text) {
  if (text == "p") return PartitionFunctionTag::p();
  auto parse_num = [&](std::size_t pos) -> std::uint32_t {
    try {
      unsigned long v = std::stoul(text.substr(pos));
      return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      fail_validation("bad function tag '" + text + "'");
    }
  };
  if (text.rfind("bp", 0) == 0) return distinct_regular(parse_num(2));
  if (text.rfind("b'", 0) == 0) return distinct_regular(parse_num(2));
  if (text.rfind("b", 0) == 0) return regular(parse_num(1));
  fail_validation("bad function tag '" + text + "' (expected p, b<ell>, bp<prime>)");
}

Series partition_numbers(std::size_t truncation, std::uint32_t modulus) {
  // Generalized pentagonal offsets with the alternating-pair sign pattern.
  struct Tap {
    std::size_t offset;
    bool plus;  // true: add, false: subtract
  };
  std::vector<Tap> taps;
  for (std::int64_t k = 1;; ++k) {
    std::int64_t g1 = k * (3 * k - 1) / 2;
    std::int64_t g2 = k * (3 * k + 1) / 2;
    if (static_cast<std::uint64_t>(g1) > truncation) break;
    bool plus = (k % 2 == 1);
    taps.push_back({static_cast<std::size_t>(g1), plus});
    if (static_cast<std::uint64_t>(g2) <= truncation)
      taps.push_back({static_cast<std::size_t>(g2), plus});
  }

  if (modulus == 0) {
    std::vector<mpz_class> p(truncation + 1, mpz_class(0));
    p[0] = 1;
    for (std::size_t n = 1; n <= truncation; ++n) {
      mpz_class acc(0);
      for (const auto& t : taps) {
        if (t.offset > n) break;
        if (t.plus)
          acc += p[n - t.offset];
        else
          acc -= p[n - t.offset];
      }
      p[n] = acc;
    }
    return make_series(p, 0);
  }

  const std::uint64_t m = modulus;
  std::vector<std::uint32_t> p(truncation + 1, 0);
  p[0] = 1 % modulus;
  for (std::size_t n = 1; n <= truncation; ++n) {
    std::uint64_t acc = 0;  // accumulate additively; subtraction via m-complement
    for (const auto& t : taps) {
      if (t.offset > n) break;
      std::uint64_t v = p[n - t.offset];
      acc += t.plus ? v : (m - v) % m;
      if (acc >= (std::uint64_t(1) << 62)) acc %= m;
    }
    p[n] = static_cast<std::uint32_t>(acc % m);
  }
  return Series::from_residues(std::move(p), modulus);
}

Series b_ell_series(std::uint32_t ell, std::size_t truncation,
                    std::uint32_t modulus) {
  if (ell < 2) fail_validation("b_ell_series needs ell >= 2");
  Series part = partition_numbers(truncation, modulus);
  Series scaled = substitute_power(euler_series(truncation, modulus), ell);
  return mul(part, scaled);
}

Series b_p_prime_series(std::uint32_t p, std::size_t truncation,
                        std::uint32_t modulus) {
  if (p < 5 || !is_prime_u32(p))
    fail_validation("b_p_prime_series needs a prime p >= 5");
  // (-q; q) / (-q^p; q^p) = E(2) E(p) / (E(1) E(2p)) with E(d) = (q^d; q^d).
  EtaQuotientSpec spec;
  spec.factors = {{2, 1}, {p, 1}, {1, -1}, {2ull * p, -1}};
  return eta_quotient_series(spec, truncation, modulus);
}

Series series_for_tag(const PartitionFunctionTag& tag, std::size_t truncation,
                      std::uint32_t modulus) {
  switch (tag.kind) {
    case PartitionFunctionTag::Kind::unrestricted:
      return partition_numbers(truncation, modulus);
    case PartitionFunctionTag::Kind::regular:
      return b_ell_series(tag.param, truncation, modulus);
    case PartitionFunctionTag::Kind::distinct_regular:
      return b_p_prime_series(tag.param, truncation, modulus);
  }
  fail_validation("unknown partition function tag");
}

namespace {

// Count partitions of n with parts <= maxpart, parts filtered by `allowed`,
// optionally with all parts distinct. Memoized recursion.
struct EnumKey {
  std::size_t n, maxpart;
  bool operator<(const EnumKey& o) const {
    return n != o.n ? n < o.n : maxpart < o.maxpart;
  }
};

template <typename Allowed>
mpz_class count_rec(std::size_t n, std::size_t maxpart, bool distinct,
                    const Allowed& allowed, std::map<EnumKey, mpz_class>& memo) {
  if (n == 0) return 1;
  if (maxpart == 0) return 0;
  auto it = memo.find({n, maxpart});
  if (it != memo.end()) return it->second;
  mpz_class total(0);
  for (std::size_t j = std::min(n, maxpart); j >= 1; --j) {
    if (!allowed(j)) continue;
    total += count_rec(n - j, distinct ? j - 1 : j, distinct, allowed, memo);
  }
  memo.emplace(EnumKey{n, maxpart}, total);
  return total;
}

template <typename Allowed>
mpz_class count_partitions(std::size_t n, bool distinct, const Allowed& allowed) {
  if (n > kEnumerationGuard)
    fail_validation("enumeration oracle capped at n <= " +
                    std::to_string(kEnumerationGuard));
  std::map<EnumKey, mpz_class> memo;
  return count_rec(n, n, distinct, allowed, memo);
}

}  // namespace

mpz_class b_ell_enumerate(std::uint32_t ell, std::size_t n) {
  if (ell < 2) fail_validation("b_ell_enumerate needs ell >= 2");
  return count_partitions(n, false,
                          [ell](std::size_t j) { return j % ell != 0; });
}

mpz_class partitions_enumerate(std::size_t n) {
  return count_partitions(n, false, [](std::size_t) { return true; });
}

mpz_class distinct_regular_enumerate(std::uint32_t p, std::size_t n) {
  if (p < 5 || !is_prime_u32(p))
    fail_validation("distinct_regular_enumerate needs a prime p >= 5");
  return count_partitions(n, true, [p](std::size_t j) { return j % p != 0; });
}

mpz_class enumerate_tag(const PartitionFunctionTag& tag, std::size_t n) {
  switch (tag.kind) {
    case PartitionFunctionTag::Kind::unrestricted:
      return partitions_enumerate(n);
    case PartitionFunctionTag::Kind::regular:
      return b_ell_enumerate(tag.param, n);
    case PartitionFunctionTag::Kind::distinct_regular:
      return distinct_regular_enumerate(tag.param, n);
  }
  fail_validation("unknown partition function tag");
}

RelationReport check_bp_prime_relation(std::uint32_t p, std::size_t n_max) {
  if (p < 5 || !is_prime_u32(p))
    fail_validation("check_bp_prime_relation needs a prime p >= 5");
  RelationReport rep;
  rep.p = p;
  rep.offset = (static_cast<std::uint64_t>(p) * p - 1) / 24;
  rep.n_checked = n_max + 1;

  std::size_t big = static_cast<std::size_t>(p) * n_max + rep.offset;
  Series bp_prime = b_p_prime_series(p, big, 2);
  Series bp = b_ell_series(p, n_max, 2);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::uint32_t lhs = bp_prime.residue(static_cast<std::size_t>(p) * n + rep.offset);
    std::uint32_t rhs = bp.residue(n);
    if (lhs != rhs) {
      rep.match = false;
      rep.witness = n;
      rep.lhs = lhs;
      rep.rhs = rhs;
      return rep;
    }
  }
  rep.match = true;
  return rep;
}

}  // namespace regulus
