#include "doctest.h"

#include <algorithm>

#include "regulus/dissection.hpp"

using namespace regulus;

TEST_CASE("psi dissection replays numerically and stays in class") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::size_t N = 3u * p * p;
    DissectionReport rep = psi_dissection(p, N);
    CHECK(rep.prime == p);
    CHECK(rep.matched);
    CHECK(rep.class_consistent);
    CHECK(rep.comparison.match);
    CHECK(rep.components.size() == (p - 1) / 2 + 1);
    // support equals the class list of the components, sorted and distinct
    std::vector<std::uint32_t> classes;
    for (const auto& c : rep.components) classes.push_back(c.residue_class);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    CHECK(rep.support == classes);
    CHECK(rep.support == support_classes(DissectFunction::psi, p));
  }
}

TEST_CASE("psi dissection frozen support sets") {
  DissectionReport r3 = psi_dissection(3, 600);
  CHECK(r3.support == std::vector<std::uint32_t>{0, 1});
  CHECK(r3.special_class == 1);

  DissectionReport r5 = psi_dissection(5, 600);
  CHECK(r5.support == std::vector<std::uint32_t>{0, 1, 3});
  CHECK(r5.special_class == 3);

  DissectionReport r7 = psi_dissection(7, 600);
  CHECK(r7.support == std::vector<std::uint32_t>{0, 1, 3, 6});
  CHECK(r7.special_class == 6);
}

TEST_CASE("f dissection replays numerically and stays in class") {
  for (std::uint32_t p : {5u, 7u}) {
    std::size_t N = 3u * p * p;
    DissectionReport rep = f_dissection(p, N);
    CHECK(rep.matched);
    CHECK(rep.class_consistent);
    CHECK(rep.components.size() == static_cast<std::size_t>(p));  // p-1 general + special
    CHECK(rep.support == support_classes(DissectFunction::f_neg, p));
  }
}

TEST_CASE("f dissection frozen support sets and special data") {
  DissectionReport r5 = f_dissection(5, 600);
  CHECK(r5.support == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(r5.special_class == 1);
  CHECK(r5.special_k == -1);

  DissectionReport r7 = f_dissection(7, 600);
  CHECK(r7.support == std::vector<std::uint32_t>{0, 1, 2, 5});
  CHECK(r7.special_class == 2);
  CHECK(r7.special_k == 1);
}

TEST_CASE("excluded index k* for f") {
  CHECK(f_special_k(5) == -1);
  CHECK(f_special_k(7) == 1);
  CHECK(f_special_k(11) == -2);
  CHECK(f_special_k(13) == 2);
  CHECK_THROWS_AS(f_special_k(3), Error);
  CHECK_THROWS_AS(f_special_k(9), Error);
}

TEST_CASE("disjointness sweeps for all dissectable primes below 100") {
  for (std::uint32_t p = 3; p <= 97; ++p) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) { prime = false; break; }
    if (!prime) continue;
    DisjointnessResult psi = disjointness_check(DissectFunction::psi, p);
    CHECK(psi.pass);
    if (p >= 5) {
      DisjointnessResult f = disjointness_check(DissectFunction::f_neg, p);
      CHECK(f.pass);
    }
  }
}

TEST_CASE("dissection validation") {
  CHECK_THROWS_AS(psi_dissection(4, 600), Error);   // not prime
  CHECK_THROWS_AS(psi_dissection(2, 600), Error);   // even
  CHECK_THROWS_AS(psi_dissection(5, 20), Error);    // N < p^2
  CHECK_THROWS_AS(f_dissection(3, 600), Error);     // f needs p >= 5
  CHECK_THROWS_AS(f_dissection(5, 70), Error);      // N < 3p^2
  CHECK_THROWS_AS(support_classes(DissectFunction::f_neg, 3), Error);
}
