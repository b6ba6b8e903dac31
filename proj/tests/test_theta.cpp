#include "doctest.h"

#include "oracles.hpp"
#include "regulus/theta.hpp"

using namespace regulus;

TEST_CASE("euler_series matches the expanded product") {
  const std::size_t N = 300;
  Series s = euler_series(N);
  auto prod = oracles::euler_product(N);
  for (std::size_t n = 0; n <= N; ++n) CHECK(s.coeff(n) == prod[n]);

  Series m = euler_series(N, 5);
  for (std::size_t n = 0; n <= N; ++n) {
    mpz_class e = ((prod[n] % 5) + 5) % 5;
    CHECK(m.residue(n) == e);
  }
}

TEST_CASE("psi_series matches the expanded product") {
  const std::size_t N = 300;
  Series s = psi_series(N);
  auto prod = oracles::psi_product(N);
  for (std::size_t n = 0; n <= N; ++n) CHECK(s.coeff(n) == prod[n]);
}

TEST_CASE("jacobi_cube_series equals euler_series cubed") {
  const std::size_t N = 200;
  Series lhs = jacobi_cube_series(N);
  Series e = euler_series(N);
  Series rhs = mul(mul(e, e), e);
  CompareResult r = compare(lhs, rhs);
  CHECK(r.match);
  CHECK(verify_jacobi_cube(N).match);
}

TEST_CASE("theta_f with a = b = q gives the square generating function") {
  // f(q, q) = sum_{n in Z} q^{n^2} = 1 + 2q + 2q^4 + 2q^9 + ...
  Series s = theta_f(ThetaSpec::general(1, 1, 1, 1), 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    std::size_t root = 0;
    bool square = false;
    while (root * root <= n) {
      if (root * root == n) { square = true; break; }
      ++root;
    }
    mpz_class expect = n == 0 ? 1 : (square ? 2 : 0);
    CHECK(s.coeff(n) == expect);
  }
}

TEST_CASE("named theta kinds agree with their general forms") {
  const std::size_t N = 120;
  CHECK(compare(psi_series(N), theta_f(ThetaSpec::psi(), N)).match);
  CHECK(compare(euler_series(N), theta_f(ThetaSpec::f_neg(), N)).match);
}

TEST_CASE("eta quotient 5^1,1^-1 counts 5-regular partitions") {
  const std::size_t N = 150;
  EtaQuotientSpec spec = EtaQuotientSpec::parse("5^1,1^-1");
  Series s = eta_quotient_series(spec, N);
  auto table = oracles::ell_regular_table(5, N);
  for (std::size_t n = 0; n <= N; ++n) CHECK(s.coeff(n) == table[n]);
}

TEST_CASE("EtaQuotientSpec parse and to_string round-trip") {
  EtaQuotientSpec spec = EtaQuotientSpec::parse("2^1,26^1,1^-1,52^-1");
  REQUIRE(spec.factors.size() == 4);
  CHECK(spec.factors[0].scale == 2);
  CHECK(spec.factors[0].exponent == 1);
  CHECK(spec.factors[3].scale == 52);
  CHECK(spec.factors[3].exponent == -1);
  CHECK(EtaQuotientSpec::parse(spec.to_string()).to_string() == spec.to_string());

  CHECK_THROWS_AS(EtaQuotientSpec::parse(""), Error);
  CHECK_THROWS_AS(EtaQuotientSpec::parse("5^0"), Error);        // zero exponent
  CHECK_THROWS_AS(EtaQuotientSpec::parse("0^1"), Error);        // zero scale
  CHECK_THROWS_AS(EtaQuotientSpec::parse("5^1,5^2"), Error);    // repeated scale
  CHECK_THROWS_AS(EtaQuotientSpec::parse("banana"), Error);
}

TEST_CASE("Jacobi triple product holds for small monomial substitutions") {
  for (std::uint64_t t : {1ull, 2ull}) {
    for (int sign : {1, -1}) {
      CompareResult r = verify_jtp(t, sign, 200);
      CHECK(r.match);
    }
  }
}

TEST_CASE("quintuple product identity holds for small exponents") {
  for (std::uint64_t u : {1ull, 2ull})
    for (std::uint64_t v : {1ull, 2ull})
      CHECK(verify_quintuple(u, v, 200).match);
}

TEST_CASE("pentagonal 5-dissection of the Euler product") {
  Ramanujan5Report rep = ramanujan5_check(150);
  CHECK(rep.result.match);
  // a(q) and b(q) are reciprocal: a*b == 1.
  Series prod = mul(rep.a, rep.b);
  CHECK(prod.coeff(0) == 1);
  for (std::size_t n = 1; n <= prod.truncation(); ++n) CHECK(prod.coeff(n) == 0);
}

TEST_CASE("theta validation rejects malformed specs") {
  CHECK_THROWS_AS(ThetaSpec::general(0, 1, 1, 1), Error);   // sign must be +-1
  CHECK_THROWS_AS(ThetaSpec::general(1, 0, 1, 0), Error);   // r + s > 0, r >= 1
  CHECK_THROWS_AS(theta_f(ThetaSpec::psi(), 10, 1), Error); // modulus 1
}
