#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace regulus {

// Library-wide error with a kind that the CLI maps onto exit codes:
// validation -> 2, resource -> 3.
enum class ErrorKind { validation, resource };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& what) {
  throw Error(ErrorKind::validation, what);
}
[[noreturn]] inline void fail_resource(const std::string& what) {
  throw Error(ErrorKind::resource, what);
}

// Truncated formal power series with exact integer coefficients (modulus 0)
// or canonical residues in [0, m) (modulus m >= 2). `truncation` is the
// largest exponent stored; a series always stores truncation+1 coefficients.
// Values are immutable after construction; every operation returns a new
// series, so sharing across threads is safe.
class Series {
 public:
  Series() : modulus_(0), exact_(1, mpz_class(0)) {}

  // Exact-mode constructor; coefficients are taken as given.
  Series(std::vector<mpz_class> coeffs, std::uint32_t modulus);

  static Series zeros(std::size_t truncation, std::uint32_t modulus);

  // Adopts an already-canonical residue vector (every value in [0, m)).
  static Series from_residues(std::vector<std::uint32_t> residues,
                              std::uint32_t modulus);

  std::size_t truncation() const {
    return (modulus_ == 0 ? exact_.size() : residues_.size()) - 1;
  }
  std::uint32_t modulus() const { return modulus_; }
  bool exact_mode() const { return modulus_ == 0; }

  // Coefficient of q^n as an integer (the canonical residue when modular).
  mpz_class coeff(std::size_t n) const;
  // Modular-mode fast accessor.
  std::uint32_t residue(std::size_t n) const { return residues_[n]; }

  std::size_t nonzero_count() const;
  std::string to_string(std::size_t max_terms = 12) const;

  const std::vector<mpz_class>& exact_data() const { return exact_; }
  const std::vector<std::uint32_t>& residue_data() const { return residues_; }

 private:
  std::uint32_t modulus_;
  std::vector<mpz_class> exact_;        // used when modulus_ == 0
  std::vector<std::uint32_t> residues_; // used when modulus_ >= 2

  friend Series make_series(const std::vector<mpz_class>&, std::uint32_t);
  friend class SeriesBuilder;
};

// Mutable staging area for constructing a Series coefficient by coefficient.
class SeriesBuilder {
 public:
  SeriesBuilder(std::size_t truncation, std::uint32_t modulus);
  std::size_t truncation() const { return trunc_; }
  std::uint32_t modulus() const { return modulus_; }
  // coeffs[n] += value (reduced if modular); n > truncation is ignored,
  // which lets generator loops overshoot harmlessly.
  void add(std::size_t n, long value);
  void add(std::size_t n, const mpz_class& value);
  Series build() &&;

 private:
  std::size_t trunc_;
  std::uint32_t modulus_;
  std::vector<mpz_class> exact_;
  std::vector<std::uint32_t> residues_;
};

// Construction with canonicalization. modulus must be 0 or >= 2.
Series make_series(const std::vector<mpz_class>& coeffs, std::uint32_t modulus);
Series make_series(const std::vector<long>& coeffs, std::uint32_t modulus);

// Coefficientwise sum/difference; truncation = min of inputs. Moduli must be
// equal, or one side exact (which is reduced first).
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

// Cauchy product truncated to min truncation. Iterates over the sparser
// factor, so multiplying a dense series by a theta-type series costs
// O(N * sqrt(N)).
Series mul(const Series& a, const Series& b);

// Multiplicative inverse up to truncation; requires a unit constant term
// (+-1 exactly, or invertible mod m).
Series invert(const Series& a);

// q -> q^k. Truncation preserved: coefficient of q^{kn} is a_n, rest zero.
Series substitute_power(const Series& a, std::uint64_t k);

// The p series of coefficients in each residue class of exponents mod p:
// parts[r] holds sum_n a_{pn+r} q^n.
struct ResidueComponents {
  std::uint32_t prime = 1;
  std::vector<Series> parts;
};

ResidueComponents dissect(const Series& a, std::uint32_t p);

// Interleaves the parts back; inverse of dissect up to `truncation`.
Series reassemble(const ResidueComponents& rc, std::size_t truncation);

// Canonicalize mod m. Input must be exact or have a modulus divisible by m.
Series reduce_mod(const Series& a, std::uint32_t m);

// Equality up to the shorter truncation, reporting where it was compared and
// the first mismatching coefficient if any.
struct CompareResult {
  bool match = false;
  std::size_t truncation = 0;      // compared through this exponent
  std::size_t first_mismatch = 0;  // meaningful when !match
  mpz_class lhs, rhs;              // values at the mismatch
  std::string describe() const;
};

CompareResult compare(const Series& a, const Series& b);

}  // namespace regulus
