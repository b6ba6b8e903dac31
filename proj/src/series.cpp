#include "regulus/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace regulus {

namespace {

std::uint32_t canonical_residue(const mpz_class& v, std::uint32_t m) {
  mpz_class r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t canonical_residue(long v, std::uint32_t m) {
  long r = v % static_cast<long>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

void check_modulus_arg(std::uint32_t m) {
  if (m == 1) fail_validation("modulus 1 is degenerate; use 0 (exact) or m >= 2");
}

// Common harmonization for binary ops: equal moduli pass through; one exact
// side is reduced to the other's modulus; different nonzero moduli reject.
std::pair<Series, Series> harmonize(const Series& a, const Series& b) {
  if (a.modulus() == b.modulus()) return {a, b};
  if (a.modulus() == 0) return {reduce_mod(a, b.modulus()), b};
  if (b.modulus() == 0) return {a, reduce_mod(b, a.modulus())};
  fail_validation("incompatible moduli " + std::to_string(a.modulus()) +
                  " and " + std::to_string(b.modulus()));
}

}  // namespace

Series::Series(std::vector<mpz_class> coeffs, std::uint32_t modulus)
    : modulus_(modulus) {
  check_modulus_arg(modulus);
  if (coeffs.empty()) fail_validation("series needs at least one coefficient");
  if (modulus == 0) {
    exact_ = std::move(coeffs);
  } else {
    residues_.reserve(coeffs.size());
    for (const auto& c : coeffs) residues_.push_back(canonical_residue(c, modulus));
  }
}

Series Series::zeros(std::size_t truncation, std::uint32_t modulus) {
  check_modulus_arg(modulus);
  Series s;
  s.modulus_ = modulus;
  if (modulus == 0) {
    s.exact_.assign(truncation + 1, mpz_class(0));
  } else {
    s.exact_.clear();
    s.residues_.assign(truncation + 1, 0);
  }
  return s;
}

Series Series::from_residues(std::vector<std::uint32_t> residues,
                             std::uint32_t modulus) {
  if (modulus < 2) fail_validation("from_residues needs m >= 2");
  if (residues.empty()) fail_validation("series needs at least one coefficient");
  for (auto& r : residues) r %= modulus;
  Series s;
  s.modulus_ = modulus;
  s.exact_.clear();
  s.residues_ = std::move(residues);
  return s;
}

mpz_class Series::coeff(std::size_t n) const {
  if (n > truncation()) fail_validation("coefficient index beyond truncation");
  if (modulus_ == 0) return exact_[n];
  return mpz_class(residues_[n]);
}

std::size_t Series::nonzero_count() const {
  std::size_t count = 0;
  if (modulus_ == 0) {
    for (const auto& c : exact_)
      if (c != 0) ++count;
  } else {
    for (auto r : residues_)
      if (r != 0) ++count;
  }
  return count;
}

std::string Series::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  bool first = true;
  for (std::size_t n = 0; n <= truncation() && shown < max_terms; ++n) {
    mpz_class c = coeff(n);
    if (c == 0) continue;
    if (!first) os << " + ";
    os << c << "*q^" << n;
    first = false;
    ++shown;
  }
  if (first) os << "0";
  os << " (trunc " << truncation();
  if (modulus_) os << ", mod " << modulus_;
  os << ")";
  return os.str();
}

SeriesBuilder::SeriesBuilder(std::size_t truncation, std::uint32_t modulus)
    : trunc_(truncation), modulus_(modulus) {
  check_modulus_arg(modulus);
  if (modulus == 0)
    exact_.assign(truncation + 1, mpz_class(0));
  else
    residues_.assign(truncation + 1, 0);
}

void SeriesBuilder::add(std::size_t n, long value) {
  if (n > trunc_) return;
  if (modulus_ == 0) {
    exact_[n] += value;
  } else {
    std::uint64_t sum = residues_[n] + canonical_residue(value, modulus_);
    residues_[n] = static_cast<std::uint32_t>(sum % modulus_);
  }
}

void SeriesBuilder::add(std::size_t n, const mpz_class& value) {
  if (n > trunc_) return;
  if (modulus_ == 0) {
    exact_[n] += value;
  } else {
    std::uint64_t sum = residues_[n] + canonical_residue(value, modulus_);
    residues_[n] = static_cast<std::uint32_t>(sum % modulus_);
  }
}

Series SeriesBuilder::build() && {
  Series s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.exact_ = std::move(exact_);
  } else {
    s.exact_.clear();
    s.residues_ = std::move(residues_);
  }
  return s;
}

Series make_series(const std::vector<mpz_class>& coeffs, std::uint32_t modulus) {
  return Series(coeffs, modulus);
}

Series make_series(const std::vector<long>& coeffs, std::uint32_t modulus) {
  std::vector<mpz_class> z(coeffs.begin(), coeffs.end());
  return Series(std::move(z), modulus);
}

namespace {

template <typename Op>
Series pointwise(const Series& a0, const Series& b0, Op op) {
  auto [a, b] = harmonize(a0, b0);
  std::size_t trunc = std::min(a.truncation(), b.truncation());
  std::uint32_t m = a.modulus();
  if (m == 0) {
    std::vector<mpz_class> out(trunc + 1);
    for (std::size_t n = 0; n <= trunc; ++n)
      out[n] = op(a.exact_data()[n], b.exact_data()[n]);
    return Series(std::move(out), 0);
  }
  SeriesBuilder sb(trunc, m);
  for (std::size_t n = 0; n <= trunc; ++n) {
    mpz_class v = op(mpz_class(a.residue_data()[n]), mpz_class(b.residue_data()[n]));
    sb.add(n, v);
  }
  return std::move(sb).build();
}

}  // namespace

Series add(const Series& a, const Series& b) {
  return pointwise(a, b, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x + y); });
}

Series sub(const Series& a, const Series& b) {
  return pointwise(a, b, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); });
}

Series mul(const Series& a0, const Series& b0) {
  auto [a, b] = harmonize(a0, b0);
  std::size_t trunc = std::min(a.truncation(), b.truncation());
  std::uint32_t m = a.modulus();

  // Iterate over the factor with fewer nonzero terms.
  const Series& sparse = a.nonzero_count() <= b.nonzero_count() ? a : b;
  const Series& dense = (&sparse == &a) ? b : a;

  if (m == 0) {
    std::vector<mpz_class> out(trunc + 1, mpz_class(0));
    const auto& s = sparse.exact_data();
    const auto& d = dense.exact_data();
    for (std::size_t i = 0; i < s.size() && i <= trunc; ++i) {
      if (s[i] == 0) continue;
      std::size_t jmax = std::min(trunc - i, dense.truncation());
      for (std::size_t j = 0; j <= jmax; ++j) {
        if (d[j] == 0) continue;
        out[i + j] += s[i] * d[j];
      }
    }
    return Series(std::move(out), 0);
  }

  std::vector<std::uint32_t> out(trunc + 1, 0);
  const auto& s = sparse.residue_data();
  const auto& d = dense.residue_data();
  const std::uint64_t mod = m;
  for (std::size_t i = 0; i < s.size() && i <= trunc; ++i) {
    if (s[i] == 0) continue;
    const std::uint64_t si = s[i];
    std::size_t jmax = std::min(trunc - i, dense.truncation());
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (d[j] == 0) continue;
      std::uint64_t v = out[i + j] + si * d[j] % mod;
      out[i + j] = static_cast<std::uint32_t>(v % mod);
    }
  }
  return Series::from_residues(std::move(out), m);
}

Series invert(const Series& a) {
  std::size_t trunc = a.truncation();
  std::uint32_t m = a.modulus();

  if (m == 0) {
    const auto& c = a.exact_data();
    if (c[0] != 1 && c[0] != -1)
      fail_validation("exact inversion needs constant term +1 or -1, got " +
                      c[0].get_str());
    // Collect nonzero taps once; recurrence z_n = (y_n - sum a_g z_{n-g}) / a_0
    // with y = 1.
    std::vector<std::pair<std::size_t, const mpz_class*>> taps;
    for (std::size_t g = 1; g <= trunc; ++g)
      if (c[g] != 0) taps.emplace_back(g, &c[g]);
    std::vector<mpz_class> z(trunc + 1, mpz_class(0));
    z[0] = c[0];  // 1/1 = 1, 1/-1 = -1
    for (std::size_t n = 1; n <= trunc; ++n) {
      mpz_class acc(0);
      for (const auto& [g, ag] : taps) {
        if (g > n) break;
        acc += *ag * z[n - g];
      }
      z[n] = (c[0] == 1) ? -acc : acc;
    }
    return Series(std::move(z), 0);
  }

  const auto& c = a.residue_data();
  mpz_class c0(c[0]), minv, mm(m);
  if (mpz_invert(minv.get_mpz_t(), c0.get_mpz_t(), mm.get_mpz_t()) == 0)
    fail_validation("constant term " + std::to_string(c[0]) +
                    " is not invertible mod " + std::to_string(m));
  const std::uint64_t inv0 = minv.get_ui();
  const std::uint64_t mod = m;
  std::vector<std::pair<std::size_t, std::uint32_t>> taps;
  for (std::size_t g = 1; g <= trunc; ++g)
    if (c[g] != 0) taps.emplace_back(g, c[g]);
  std::vector<std::uint32_t> z(trunc + 1, 0);
  z[0] = static_cast<std::uint32_t>(inv0);
  for (std::size_t n = 1; n <= trunc; ++n) {
    std::uint64_t acc = 0;
    for (const auto& [g, ag] : taps) {
      if (g > n) break;
      acc = (acc + static_cast<std::uint64_t>(ag) * z[n - g]) % mod;
    }
    // z_n = -inv0 * acc
    std::uint64_t v = acc * inv0 % mod;
    z[n] = static_cast<std::uint32_t>((mod - v) % mod);
  }
  return Series::from_residues(std::move(z), m);
}

Series substitute_power(const Series& a, std::uint64_t k) {
  if (k == 0) fail_validation("substitute_power needs k >= 1");
  if (k == 1) return a;
  std::size_t trunc = a.truncation();
  SeriesBuilder sb(trunc, a.modulus());
  for (std::size_t n = 0; n <= trunc / k; ++n) {
    mpz_class c = a.coeff(n);
    if (c != 0) sb.add(n * k, c);
  }
  return std::move(sb).build();
}

ResidueComponents dissect(const Series& a, std::uint32_t p) {
  if (p == 0) fail_validation("dissect needs p >= 1");
  ResidueComponents rc;
  rc.prime = p;
  std::size_t trunc = a.truncation();
  for (std::uint32_t r = 0; r < p; ++r) {
    std::size_t part_trunc = (trunc >= r) ? (trunc - r) / p : 0;
    SeriesBuilder sb(part_trunc, a.modulus());
    for (std::size_t t = 0; t <= part_trunc; ++t) {
      std::size_t idx = static_cast<std::size_t>(t) * p + r;
      if (idx > trunc) break;
      sb.add(t, a.coeff(idx));
    }
    rc.parts.push_back(std::move(sb).build());
  }
  return rc;
}

Series reassemble(const ResidueComponents& rc, std::size_t truncation) {
  if (rc.parts.empty()) fail_validation("reassemble needs at least one part");
  SeriesBuilder sb(truncation, rc.parts[0].modulus());
  for (std::uint32_t r = 0; r < rc.prime; ++r) {
    const Series& part = rc.parts[r];
    for (std::size_t t = 0; t <= part.truncation(); ++t) {
      std::size_t idx = static_cast<std::size_t>(t) * rc.prime + r;
      if (idx > truncation) break;
      sb.add(idx, part.coeff(t));
    }
  }
  return std::move(sb).build();
}

Series reduce_mod(const Series& a, std::uint32_t m) {
  if (m < 2) fail_validation("reduce_mod needs m >= 2");
  if (a.modulus() == m) return a;
  if (a.modulus() != 0 && a.modulus() % m != 0)
    fail_validation("cannot reduce mod " + std::to_string(m) +
                    ": existing modulus " + std::to_string(a.modulus()) +
                    " is not a multiple");
  SeriesBuilder sb(a.truncation(), m);
  for (std::size_t n = 0; n <= a.truncation(); ++n) sb.add(n, a.coeff(n));
  return std::move(sb).build();
}

CompareResult compare(const Series& a0, const Series& b0) {
  auto [a, b] = harmonize(a0, b0);
  CompareResult res;
  res.truncation = std::min(a.truncation(), b.truncation());
  for (std::size_t n = 0; n <= res.truncation; ++n) {
    mpz_class x = a.coeff(n), y = b.coeff(n);
    if (x != y) {
      res.match = false;
      res.first_mismatch = n;
      res.lhs = x;
      res.rhs = y;
      return res;
    }
  }
  res.match = true;
  return res;
}

std::string CompareResult::describe() const {
  std::ostringstream os;
  if (match) {
    os << "match through q^" << truncation;
  } else {
    os << "mismatch at q^" << first_mismatch << ": " << lhs << " vs " << rhs
       << " (compared through q^" << truncation << ")";
  }
  return os.str();
}

}  // namespace regulus
