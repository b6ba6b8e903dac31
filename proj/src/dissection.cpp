#include "regulus/dissection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "regulus/partitions.hpp"
#include "regulus/theta.hpp"

namespace regulus {

namespace {

std::uint64_t tri_u(std::int64_t n) {
  return static_cast<std::uint64_t>(n * (n + 1) / 2);
}

std::uint64_t pent_u(std::int64_t k) {
  return static_cast<std::uint64_t>(k * (3 * k + 1) / 2);
}

void require_odd_prime(std::uint32_t p, const char* who) {
  if (p < 3 || !is_prime_u32(p))
    fail_validation(std::string(who) + " needs an odd prime, got " +
                    std::to_string(p));
}

// Adds sign * q^{base + r*T(n) + s*T(n-1)} over all n with exponent <= trunc;
// inner_negative flips by parity of n (the f(-a,-b) sign pattern).
// Verifies every generated exponent lies in `cls` mod p.
void expand_component(SeriesBuilder& sb, int sign, std::uint64_t base,
                      std::uint64_t r, std::uint64_t s, bool inner_negative,
                      std::uint32_t p, std::uint32_t cls, bool& class_ok) {
  const std::size_t trunc = sb.truncation();
  std::int64_t limit = static_cast<std::int64_t>(std::sqrt(
                           2.0 * static_cast<double>(trunc) /
                           static_cast<double>(r + s))) +
                       3;
  for (std::int64_t n = -limit; n <= limit; ++n) {
    unsigned __int128 e = static_cast<unsigned __int128>(r) * tri_u(n) +
                          static_cast<unsigned __int128>(s) * tri_u(n - 1) + base;
    if (e > trunc) continue;
    std::uint64_t exp = static_cast<std::uint64_t>(e);
    if (exp % p != cls) class_ok = false;
    int c = sign;
    if (inner_negative && (n % 2 != 0)) c = -c;
    sb.add(exp, c);
  }
}

}  // namespace

std::string DissectionComponent::describe(DissectFunction f,
                                          std::uint32_t p) const {
  std::ostringstream os;
  bool neg = (f == DissectFunction::f_neg);
  if (sign < 0) os << "-";
  if (prefactor_exp > 0) os << "q^" << prefactor_exp << " * ";
  if (special) {
    if (neg)
      os << "f(-q^" << static_cast<std::uint64_t>(p) * p << ")";
    else
      os << "psi(q^" << static_cast<std::uint64_t>(p) * p << ")";
  } else {
    const char* s = neg ? "-" : "";
    os << "f(" << s << "q^" << theta_r << ", " << s << "q^" << theta_s << ")";
  }
  os << "  [k=" << k << ", class " << residue_class << " mod " << p << "]";
  return os.str();
}

int f_special_k(std::uint32_t p) {
  if ((p - 1) % 6 == 0) return static_cast<int>((p - 1) / 6);
  if ((p + 1) % 6 == 0) return -static_cast<int>((p + 1) / 6);
  fail_validation("no integral (+-p-1)/6 for p = " + std::to_string(p));
}

DissectionReport psi_dissection(std::uint32_t p, std::size_t truncation) {
  require_odd_prime(p, "psi_dissection");
  const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
  if (truncation < p2)
    fail_validation("psi_dissection needs truncation >= p^2");

  DissectionReport rep;
  rep.function = DissectFunction::psi;
  rep.prime = p;
  rep.truncation = truncation;
  rep.special_class = static_cast<std::uint32_t>(((p2 - 1) / 8) % p);
  rep.special_k = 0;
  rep.class_consistent = true;

  SeriesBuilder sb(truncation, 0);
  std::set<std::uint32_t> support;

  for (std::uint32_t k = 0; k <= (p - 3) / 2; ++k) {
    DissectionComponent comp;
    comp.k = static_cast<int>(k);
    comp.sign = 1;
    comp.prefactor_exp = tri_u(k);
    comp.theta_r = (p2 + (2ull * k + 1) * p) / 2;
    comp.theta_s = (p2 - (2ull * k + 1) * p) / 2;
    comp.residue_class = static_cast<std::uint32_t>(comp.prefactor_exp % p);
    support.insert(comp.residue_class);
    expand_component(sb, comp.sign, comp.prefactor_exp, comp.theta_r,
                     comp.theta_s, false, p, comp.residue_class,
                     rep.class_consistent);
    rep.components.push_back(comp);
  }

  DissectionComponent special;
  special.k = static_cast<int>((p - 1) / 2);
  special.special = true;
  special.sign = 1;
  special.prefactor_exp = (p2 - 1) / 8;
  special.theta_r = p2;      // psi(q^{p^2}) = f(q^{p^2}, q^{3p^2})
  special.theta_s = 3 * p2;
  special.residue_class = rep.special_class;
  support.insert(special.residue_class);
  expand_component(sb, special.sign, special.prefactor_exp, special.theta_r,
                   special.theta_s, false, p, special.residue_class,
                   rep.class_consistent);
  rep.components.push_back(special);

  Series assembled = std::move(sb).build();
  rep.comparison = compare(assembled, psi_series(truncation, 0));
  rep.matched = rep.comparison.match && rep.class_consistent;
  rep.support.assign(support.begin(), support.end());
  return rep;
}

DissectionReport f_dissection(std::uint32_t p, std::size_t truncation) {
  if (p < 5 || !is_prime_u32(p))
    fail_validation("f_dissection needs a prime >= 5, got " + std::to_string(p));
  const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
  if (truncation < 3 * p2)
    fail_validation("f_dissection needs truncation >= 3p^2");

  DissectionReport rep;
  rep.function = DissectFunction::f_neg;
  rep.prime = p;
  rep.truncation = truncation;
  rep.special_class = static_cast<std::uint32_t>(((p2 - 1) / 24) % p);
  rep.special_k = f_special_k(p);
  rep.class_consistent = true;

  SeriesBuilder sb(truncation, 0);
  std::set<std::uint32_t> support;
  const int half = static_cast<int>((p - 1) / 2);

  for (int k = -half; k <= half; ++k) {
    if (k == rep.special_k) continue;
    DissectionComponent comp;
    comp.k = k;
    comp.sign = (k % 2 == 0) ? 1 : -1;
    comp.prefactor_exp = pent_u(k);
    std::int64_t sixk1 = 6ll * k + 1;
    comp.theta_r = static_cast<std::uint64_t>(
        (static_cast<std::int64_t>(3 * p2) + sixk1 * p) / 2);
    comp.theta_s = static_cast<std::uint64_t>(
        (static_cast<std::int64_t>(3 * p2) - sixk1 * p) / 2);
    comp.residue_class = static_cast<std::uint32_t>(comp.prefactor_exp % p);
    support.insert(comp.residue_class);
    expand_component(sb, comp.sign, comp.prefactor_exp, comp.theta_r,
                     comp.theta_s, true, p, comp.residue_class,
                     rep.class_consistent);
    rep.components.push_back(comp);
  }

  DissectionComponent special;
  special.k = rep.special_k;
  special.special = true;
  special.sign = (rep.special_k % 2 == 0) ? 1 : -1;
  special.prefactor_exp = (p2 - 1) / 24;
  special.theta_r = p2;       // f(-q^{p^2}) = f(-q^{p^2}, -q^{2p^2})
  special.theta_s = 2 * p2;
  special.residue_class = rep.special_class;
  support.insert(special.residue_class);
  expand_component(sb, special.sign, special.prefactor_exp, special.theta_r,
                   special.theta_s, true, p, special.residue_class,
                   rep.class_consistent);
  rep.components.push_back(special);

  Series assembled = std::move(sb).build();
  rep.comparison = compare(assembled, euler_series(truncation, 0));
  rep.matched = rep.comparison.match && rep.class_consistent;
  rep.support.assign(support.begin(), support.end());
  return rep;
}

DisjointnessResult disjointness_check(DissectFunction f, std::uint32_t p) {
  DisjointnessResult res;
  res.prime = p;
  if (f == DissectFunction::psi) {
    require_odd_prime(p, "disjointness_check(psi)");
    // k(k+1)/2 pairwise distinct mod p over 0..(p-1)/2.
    int half = static_cast<int>((p - 1) / 2);
    for (int k = 0; k <= half; ++k)
      for (int m = k + 1; m <= half; ++m)
        if (tri_u(k) % p == tri_u(m) % p) {
          res.pass = false;
          res.witness_k = k;
          res.witness_m = m;
          res.detail = "triangular classes collide";
          return res;
        }
    res.pass = true;
    res.detail = "triangular exponent classes pairwise distinct";
    return res;
  }
  if (p < 5 || !is_prime_u32(p))
    fail_validation("disjointness_check(f) needs a prime >= 5");
  const std::uint64_t special = ((static_cast<std::uint64_t>(p) * p - 1) / 24) % p;
  const int kstar = f_special_k(p);
  const int half = static_cast<int>((p - 1) / 2);
  for (int k = -half; k <= half; ++k) {
    if (k == kstar) continue;
    if (pent_u(k) % p == special) {
      res.pass = false;
      res.witness_k = k;
      res.witness_m = kstar;
      res.detail = "pentagonal class meets the special class";
      return res;
    }
  }
  res.pass = true;
  res.detail = "no pentagonal class meets the special class";
  return res;
}

std::vector<std::uint32_t> support_classes(DissectFunction f, std::uint32_t p) {
  std::set<std::uint32_t> classes;
  if (f == DissectFunction::psi) {
    require_odd_prime(p, "support_classes(psi)");
    for (std::uint32_t k = 0; k <= (p - 3) / 2; ++k)
      classes.insert(static_cast<std::uint32_t>(tri_u(k) % p));
    classes.insert(
        static_cast<std::uint32_t>(((static_cast<std::uint64_t>(p) * p - 1) / 8) % p));
  } else {
    if (p < 5 || !is_prime_u32(p))
      fail_validation("support_classes(f) needs a prime >= 5");
    const int kstar = f_special_k(p);
    const int half = static_cast<int>((p - 1) / 2);
    for (int k = -half; k <= half; ++k) {
      if (k == kstar) continue;
      classes.insert(static_cast<std::uint32_t>(pent_u(k) % p));
    }
    classes.insert(static_cast<std::uint32_t>(
        ((static_cast<std::uint64_t>(p) * p - 1) / 24) % p));
  }
  return {classes.begin(), classes.end()};
}

}  // namespace regulus
