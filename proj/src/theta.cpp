#include "regulus/theta.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace regulus {

namespace {

using u128 = unsigned __int128;

// n(n+1)/2 for signed n; always nonnegative.
std::uint64_t tri(std::int64_t n) {
  std::int64_t v = n * (n + 1) / 2;
  return static_cast<std::uint64_t>(v);
}

// Largest |n| that can contribute an exponent <= N to a quadratic-exponent
// sum with leading coefficient ~ (r+s)/2.
std::int64_t index_limit(std::size_t N, std::uint64_t rs) {
  double bound = std::sqrt(2.0 * static_cast<double>(N) / static_cast<double>(rs));
  return static_cast<std::int64_t>(bound) + 3;
}

// --- exact polynomial helpers (vector<mpz_class> with index = exponent) ----

// v *= (1 + sign q^e)
void binomial_mul(std::vector<mpz_class>& v, std::size_t e, int sign) {
  const std::size_t trunc = v.size() - 1;
  if (e == 0) {
    for (auto& c : v) c *= (1 + sign);
    return;
  }
  if (e > trunc) return;
  for (std::size_t n = trunc; n >= e; --n) {
    if (sign > 0)
      v[n] += v[n - e];
    else
      v[n] -= v[n - e];
    if (n == e) break;
  }
}

// v /= (1 - q^e)  (multiplication by the geometric series)
void geometric_mul(std::vector<mpz_class>& v, std::size_t e) {
  for (std::size_t n = e; n < v.size(); ++n) v[n] += v[n - e];
}

Series shift(const Series& s, std::uint64_t e) {
  SeriesBuilder sb(s.truncation(), s.modulus());
  for (std::size_t n = 0; n + e <= s.truncation(); ++n) sb.add(n + e, s.coeff(n));
  return std::move(sb).build();
}

}  // namespace

ThetaSpec ThetaSpec::general(int a_sign, std::uint64_t r, int b_sign,
                             std::uint64_t s) {
  if (a_sign * a_sign != 1 || b_sign * b_sign != 1)
    fail_validation("theta signs must be +1 or -1");
  if (r == 0) fail_validation("theta exponent r must be positive");
  return {Kind::general, a_sign, b_sign, r, s};
}

Series euler_series(std::size_t truncation, std::uint32_t modulus) {
  SeriesBuilder sb(truncation, modulus);
  std::int64_t limit = index_limit(truncation, 3) + 1;
  for (std::int64_t k = -limit; k <= limit; ++k) {
    std::int64_t e = k * (3 * k + 1) / 2;  // generalized pentagonal, >= 0
    if (static_cast<std::uint64_t>(e) > truncation) continue;
    sb.add(static_cast<std::size_t>(e), (k % 2 == 0) ? 1 : -1);
  }
  return std::move(sb).build();
}

Series psi_series(std::size_t truncation, std::uint32_t modulus) {
  SeriesBuilder sb(truncation, modulus);
  for (std::int64_t n = 0;; ++n) {
    std::uint64_t e = tri(n);
    if (e > truncation) break;
    sb.add(e, 1);
  }
  return std::move(sb).build();
}

Series jacobi_cube_series(std::size_t truncation, std::uint32_t modulus) {
  SeriesBuilder sb(truncation, modulus);
  for (std::int64_t n = 0;; ++n) {
    std::uint64_t e = tri(n);
    if (e > truncation) break;
    long coeff = 2 * n + 1;
    sb.add(e, (n % 2 == 0) ? coeff : -coeff);
  }
  return std::move(sb).build();
}

Series theta_f(const ThetaSpec& spec, std::size_t truncation,
               std::uint32_t modulus) {
  switch (spec.kind) {
    case ThetaSpec::Kind::psi:
      return psi_series(truncation, modulus);
    case ThetaSpec::Kind::euler:
    case ThetaSpec::Kind::f_neg:
      return euler_series(truncation, modulus);
    case ThetaSpec::Kind::jacobi_cube:
      return jacobi_cube_series(truncation, modulus);
    case ThetaSpec::Kind::general:
      break;
  }
  if (spec.r == 0 || spec.r + spec.s == 0)
    fail_validation("theta_f needs r >= 1 and r + s > 0");

  SeriesBuilder sb(truncation, modulus);
  std::int64_t limit = index_limit(truncation, spec.r + spec.s);
  for (std::int64_t n = -limit; n <= limit; ++n) {
    std::uint64_t ta = tri(n);        // exponent on a
    std::uint64_t tb = tri(n - 1);    // exponent on b
    u128 e = static_cast<u128>(spec.r) * ta + static_cast<u128>(spec.s) * tb;
    if (e > truncation) continue;
    int sign = 1;
    if (spec.a_sign < 0 && (ta & 1)) sign = -sign;
    if (spec.b_sign < 0 && (tb & 1)) sign = -sign;
    sb.add(static_cast<std::uint64_t>(e), sign);
  }
  return std::move(sb).build();
}

EtaQuotientSpec EtaQuotientSpec::parse(const std::string& text) {
  EtaQuotientSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == item.size())
      fail_validation("bad eta-quotient factor '" + item +
                      "' (expected d^e, e.g. 5^1,1^-1)");
    std::uint64_t scale = 0;
    std::int64_t exponent = 0;
    try {
      scale = std::stoull(item.substr(0, caret));
      exponent = std::stoll(item.substr(caret + 1));
    } catch (const std::exception&) {
      fail_validation("bad eta-quotient factor '" + item + "'");
    }
    spec.factors.push_back({scale, exponent});
  }
  spec.validate();
  return spec;
}

void EtaQuotientSpec::validate() const {
  if (factors.empty()) fail_validation("eta quotient needs at least one factor");
  std::set<std::uint64_t> seen;
  for (const auto& f : factors) {
    if (f.scale == 0) fail_validation("eta factor scale must be positive");
    if (f.exponent == 0) fail_validation("eta factor exponent must be nonzero");
    if (!seen.insert(f.scale).second)
      fail_validation("duplicate eta factor scale " + std::to_string(f.scale));
  }
}

std::string EtaQuotientSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << ",";
    os << f.scale << "^" << f.exponent;
    first = false;
  }
  return os.str();
}

Series eta_quotient_series(const EtaQuotientSpec& spec, std::size_t truncation,
                           std::uint32_t modulus) {
  spec.validate();
  SeriesBuilder one(truncation, modulus);
  one.add(0, 1L);
  Series acc = std::move(one).build();
  // Positive factors first, then inverted ones.
  for (int phase = 0; phase < 2; ++phase) {
    for (const auto& f : spec.factors) {
      bool positive = f.exponent > 0;
      if ((phase == 0) != positive) continue;
      Series base = substitute_power(euler_series(truncation, modulus), f.scale);
      if (!positive) base = invert(base);
      std::int64_t count = positive ? f.exponent : -f.exponent;
      for (std::int64_t i = 0; i < count; ++i) acc = mul(acc, base);
    }
  }
  return acc;
}

CompareResult verify_jtp(std::uint64_t t, int sign, std::size_t truncation) {
  if (t == 0 || sign * sign != 1)
    fail_validation("jtp specialization needs t >= 1 and sign +-1");
  const std::size_t N = truncation;
  const std::uint64_t D = t * t / 4;  // Laurent shift; exponents n^2+tn >= -D

  // Sum side, shifted: coefficient sign^n at n^2 + tn + D.
  SeriesBuilder lhs_sb(N, 0);
  std::int64_t limit =
      static_cast<std::int64_t>(std::sqrt(static_cast<double>(N + D + t))) + t + 3;
  for (std::int64_t n = -limit; n <= limit; ++n) {
    std::int64_t e = n * n + static_cast<std::int64_t>(t) * n +
                     static_cast<std::int64_t>(D);
    if (e < 0 || static_cast<std::uint64_t>(e) > N) continue;
    int c = (((n % 2) + 2) % 2 == 0) ? 1 : sign;
    lhs_sb.add(static_cast<std::uint64_t>(e), c);
  }
  Series lhs = std::move(lhs_sb).build();

  // Product side (-zq; q^2)(-q/z; q^2)(q^2; q^2) with z = sign q^t.
  // Negative-exponent binomials are rewritten (1+s q^e) = s q^e (1+s q^-e);
  // the accumulated monomial exactly cancels the shift q^D.
  std::vector<mpz_class> prod(N + 1, mpz_class(0));
  prod[0] = 1;
  std::int64_t pref_exp = 0;
  int pref_sign = 1;
  for (std::uint64_t e = t + 1; e <= N; e += 2) binomial_mul(prod, e, sign);
  for (std::int64_t e = 1 - static_cast<std::int64_t>(t);
       e <= static_cast<std::int64_t>(N); e += 2) {
    if (e > 0) {
      binomial_mul(prod, static_cast<std::size_t>(e), sign);
    } else if (e == 0) {
      binomial_mul(prod, 0, sign);  // constant (1 + sign): 2 or 0
    } else {
      pref_exp += e;
      pref_sign *= sign;
      binomial_mul(prod, static_cast<std::size_t>(-e), sign);
    }
  }
  for (std::uint64_t e = 2; e <= N; e += 2) binomial_mul(prod, e, -1);

  if (pref_exp + static_cast<std::int64_t>(D) != 0)
    fail_validation("internal jtp shift bookkeeping error");
  if (pref_sign < 0)
    for (auto& c : prod) c = -c;

  Series rhs = make_series(prod, 0);
  return compare(lhs, rhs);
}

CompareResult verify_jacobi_cube(std::size_t truncation) {
  Series sum_side = jacobi_cube_series(truncation, 0);
  Series e = euler_series(truncation, 0);
  Series cube = mul(mul(e, e), e);
  return compare(sum_side, cube);
}

CompareResult verify_quintuple(std::uint64_t u, std::uint64_t v,
                               std::size_t truncation) {
  if (u == 0 || v == 0)
    fail_validation("quintuple specialization needs u, v >= 1");
  const std::size_t N = truncation;
  // x = q^u, lambda = q^v.
  Series l1 = theta_f(ThetaSpec::general(-1, 2 * u, -1, v + u), N);
  // f(-y) with y = q^{v+3u} is f(-y, -y^2).
  Series l2 = theta_f(ThetaSpec::general(-1, v + 3 * u, -1, 2 * (v + 3 * u)), N);
  Series den = theta_f(ThetaSpec::general(-1, u, -1, v + 2 * u), N);
  Series lhs = mul(mul(l1, l2), invert(den));

  Series r1 = theta_f(ThetaSpec::general(-1, 2 * v + 3 * u, -1, v + 6 * u), N);
  Series r2 = theta_f(ThetaSpec::general(-1, v, -1, 2 * v + 9 * u), N);
  Series rhs = add(r1, shift(r2, u));
  return compare(lhs, rhs);
}

Ramanujan5Report ramanujan5_check(std::size_t truncation) {
  const std::size_t N = truncation;

  // a(q) = (q^10, q^15; q^25) / (q^5, q^20; q^25), b(q) = 1/a(q); both are
  // built from single-base factors, dividing binomial by binomial.
  auto build_quotient = [N](std::initializer_list<std::size_t> num,
                            std::initializer_list<std::size_t> den) {
    std::vector<mpz_class> v(N + 1, mpz_class(0));
    v[0] = 1;
    for (std::size_t c : num)
      for (std::size_t e = c; e <= N; e += 25) binomial_mul(v, e, -1);
    for (std::size_t c : den)
      for (std::size_t e = c; e <= N; e += 25) geometric_mul(v, e);
    return make_series(v, 0);
  };
  Series a = build_quotient({10, 15}, {5, 20});
  Series b = build_quotient({5, 20}, {10, 15});

  Series e25 = substitute_power(euler_series(N, 0), 25);
  // a - q - q^2 b
  SeriesBuilder qsb(N, 0);
  qsb.add(1, 1L);
  Series q1 = std::move(qsb).build();
  Series inner = sub(sub(a, q1), shift(b, 2));
  Series rhs = mul(e25, inner);
  Series lhs = euler_series(N, 0);

  Ramanujan5Report report{compare(lhs, rhs), a, b};
  return report;
}

}  // namespace regulus
