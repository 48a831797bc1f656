#include <doctest.h>

#include "binperm/ideal_family.hpp"

using namespace binperm;

TEST_CASE("instance shape and closed forms") {
  CHECK_THROWS_AS(make_instance(2), std::invalid_argument);

  IdealFamilyInstance i3 = make_instance(3);
  CHECK(i3.generators.size() == 3);
  CHECK(i3.generators[0].str() == "-x1 + x2*x3");
  CHECK(i3.generators[1].str() == "x1*x3 - x2");
  CHECK(i3.generators[2].str() == "x1*x2 - x3");
  CHECK(i3.colength == 5);
  CHECK(make_instance(4).colength == 17);
  CHECK(colength_of(5) == 49);

  // One x_n-power relation, n-2 pairs, one x_1 elimination.
  for (int n = 3; n <= 8; ++n) CHECK(make_instance(n).groebner.size() == 2 * n - 2);

  // Paper listing order for S_3.
  std::vector<std::string> s3;
  for (const auto& g : i3.groebner.generators()) s3.push_back(g.str());
  CHECK(s3 == std::vector<std::string>{"x3^3 - x3", "x2*x3^2 - x2", "x2^2 - x3^2", "x1 - x2*x3"});
}

TEST_CASE("lattice generators and lattice-ideal binomials") {
  IdealFamilyInstance i3 = make_instance(3);
  CHECK(i3.lattice_gens.size() == 6);
  CHECK(i3.lattice_ideal_gens.size() == 6);
  // H(0) = 0: the square relations degenerate to x_i^2 - 1.
  CHECK(i3.lattice_ideal_gens[3].str() == "x3^2 - 1");
  CHECK(i3.lattice_ideal_gens[4].str() == "x1^2 - 1");
  CHECK(i3.lattice_ideal_gens[5].str() == "x2^2 - 1");
  CHECK(heaviside(0) == 0);
  CHECK(heaviside(1) == 1);
  CHECK(heaviside(5) == 1);

  for (int n : {3, 4, 6}) {
    IdealFamilyInstance inst = make_instance(n);
    CHECK(inst.lattice_gens.size() == static_cast<std::size_t>(2 * n));
    CHECK(inst.lattice_ideal_gens.size() == static_cast<std::size_t>(2 * n));
    IntMatrix r = relation_matrix(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(inst.lattice_gens[j][i] == r.at(i, j));
    // v_{n+1} = (2n-4) e_n and v_{n+1+i} = 2 e_i - 2 H(n-3) e_n.
    for (int i = 0; i < n - 1; ++i) CHECK(inst.lattice_gens[n][i] == 0);
    CHECK(inst.lattice_gens[n][n - 1] == 2 * n - 4);
    int h = heaviside(n - 3);
    for (int i = 1; i <= n - 1; ++i) {
      for (int k = 0; k < n; ++k) {
        Int expected = 0;
        if (k == i - 1) expected += 2;
        if (k == n - 1) expected -= 2 * h;
        CHECK(inst.lattice_gens[n + i][k] == expected);
      }
    }
  }
}

TEST_CASE("relation matrix") {
  IntMatrix r3 = relation_matrix(3);
  CHECK(r3.str() == "1 -1 -1\n-1 1 -1\n-1 -1 1\n");
  IntMatrix r4 = relation_matrix(4);
  for (int i = 0; i < 4; ++i) {
    Int row_sum = 0;
    for (int j = 0; j < 4; ++j) {
      CHECK(r4.at(i, j) == (i == j ? 1 : -1));
      row_sum += r4.at(i, j);
    }
    CHECK(row_sum == 2 - 4);
  }
}

TEST_CASE("membership list reduces to zero against a from-scratch basis") {
  CHECK(verify_membership_list(3));
  CHECK(verify_membership_list(4));
  CHECK(verify_membership_list(5));
  CHECK_THROWS_AS(verify_membership_list(8), std::invalid_argument);
}

TEST_CASE("every Lt(f_i) is divisible by a leading monomial of S_n") {
  // Asserted explicitly rather than trusted.
  for (int n = 3; n <= 8; ++n) {
    IdealFamilyInstance inst = make_instance(n);
    for (const auto& f : inst.generators) {
      bool divisible = false;
      for (const auto& lm : inst.groebner.leading_monomials())
        if (lm.divides(f.leading_monomial())) divisible = true;
      CHECK(divisible);
    }
  }
}

TEST_CASE("S_n passes the criterion for n up to 7") {
  for (int n = 3; n <= 7; ++n) CHECK(is_groebner(make_instance(n).groebner));
}
