#include <doctest.h>

#include <random>

#include "binperm/checks.hpp"
#include "binperm/lattice.hpp"
#include "oracles.hpp"

using namespace binperm;

TEST_CASE("snf of the relation matrix") {
  CHECK(snf_diagonal(relation_matrix(3)) == std::vector<Int>{1, 2, 2});
  CHECK(snf_diagonal(relation_matrix(6)) == std::vector<Int>{1, 2, 2, 2, 2, 8});
  SnfResult s = snf(IntMatrix::identity(4));
  CHECK(s.diagonal() == std::vector<Int>{1, 1, 1, 1});
  CHECK(s.U * IntMatrix::identity(4) * s.V == s.S);
}

TEST_CASE("snf contract on random matrices") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
    SnfResult s = snf(a);

    CHECK(s.U * a * s.V == s.S);
    CHECK(abs(oracle::bareiss_det(s.U)) == 1);
    CHECK(abs(oracle::bareiss_det(s.V)) == 1);
    CHECK(oracle::bareiss_det(s.U) == s.u_sign);
    CHECK(oracle::bareiss_det(s.V) == s.v_sign);

    // Diagonal, nonnegative, divisibility chain.
    for (int i = 0; i < s.S.rows(); ++i)
      for (int j = 0; j < s.S.cols(); ++j)
        if (i != j) CHECK(s.S.at(i, j) == 0);
    auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
    }
    CHECK(snf_diagonal(a) == d);

    if (a.rows() == a.cols()) CHECK(det_via_snf(a) == oracle::bareiss_det(a));
  }
}

TEST_CASE("determinants") {
  for (int n = 3; n <= 20; ++n) {
    CHECK(abs(det_via_snf(relation_matrix(n))) == colength_of(n) - 1);
  }
  // K = Q_{n-1} - I for n = 5: |det| = 3.
  IntMatrix k(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) k.at(i, j) = i == j ? 0 : 1;
  CHECK(abs(det_via_snf(k)) == 3);
  CHECK(det_via_snf(k) == oracle::bareiss_det(k));

  IntMatrix singular(2, 2);
  singular.at(0, 0) = singular.at(0, 1) = singular.at(1, 0) = singular.at(1, 1) = 1;
  CHECK(det_via_snf(singular) == 0);
  CHECK_THROWS_AS(det_via_snf(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("cokernel invariants") {
  IdealFamilyInstance i4 = make_instance(4);
  std::vector<std::vector<Int>> first4(i4.lattice_gens.begin(), i4.lattice_gens.begin() + 4);
  CokernelInvariants a = cokernel_invariants(first4, 4);
  CHECK(a.factors == std::vector<Int>{2, 2, 4});
  CHECK(a.free_rank == 0);

  CokernelInvariants b = cokernel_invariants(i4.lattice_gens, 4);
  CHECK(b == a);

  CokernelInvariants empty = cokernel_invariants({}, 2);
  CHECK(empty.factors.empty());
  CHECK(empty.free_rank == 2);

  CHECK_THROWS_AS(cokernel_invariants({{Int(1)}}, 2), std::invalid_argument);
}

TEST_CASE("coset enumeration oracle confirms the n=4 cokernel") {
  // 4 Z^4 lies inside the lattice: 4e_4 = v_5 and 4e_i = 2 v_{5+i} + v_5,
  // so the quotient is (Z/4)^4 modulo the reduced generators.
  IdealFamilyInstance i4 = make_instance(4);
  for (int i = 1; i <= 3; ++i) {
    for (int k = 0; k < 4; ++k) {
      Int combo = 2 * i4.lattice_gens[4 + i][k] + i4.lattice_gens[4][k];
      CHECK(combo == (k == i - 1 ? 4 : 0));
    }
  }
  auto histogram = oracle::coset_order_histogram(i4.lattice_gens, 4, 4);
  long long total = 0;
  for (auto& [o, c] : histogram) total += c;
  CHECK(total == 16);
  CHECK(histogram == oracle::histogram_from_invariant_factors({Int(2), Int(2), Int(4)}));
}

TEST_CASE("variety enumeration") {
  auto v3 = enumerate_variety(3);
  // Exactly the four printed sign vectors, zeta = -1.
  std::vector<VarietyPoint> expected{{{0, 0, 0}}, {{0, 1, 1}}, {{1, 0, 1}}, {{1, 1, 0}}};
  CHECK(v3 == expected);

  for (int n = 3; n <= 12; ++n) {
    auto pts = enumerate_variety(n);
    CHECK(Int(static_cast<long>(pts.size())) == colength_of(n) - 1);
    CHECK(Int(static_cast<long>(pts.size())) == abs(det_via_snf(relation_matrix(n))));
  }

  // Every point annihilates the generators of I_n as well.
  for (int n : {3, 4, 5, 6}) {
    IdealFamilyInstance inst = make_instance(n);
    for (const auto& pt : enumerate_variety(n)) {
      for (const auto& f : inst.generators) CHECK(binomial_vanishes_at(f, pt, 2 * n - 4));
    }
  }
}

TEST_CASE("variety points obey the sign structure for n >= 4") {
  for (int n : {4, 5, 7}) {
    int mod = 2 * n - 4;
    for (const auto& pt : enumerate_variety(n)) {
      for (int i = 0; i < n - 1; ++i) {
        bool same = pt.exps[i] == pt.exps[n - 1];
        bool flipped = pt.exps[i] == (pt.exps[n - 1] + (n - 2)) % mod;
        CHECK((same || flipped));
      }
    }
  }
}

TEST_CASE("standard monomial counts") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(standard_monomial_count(make_instance(n).groebner) == colength_of(n));
  }
  // Not zero-dimensional: a single generator in two variables.
  GroebnerBasis partial({Polynomial::parse("x1^2", 2)});
  CHECK_THROWS_AS(standard_monomial_count(partial), std::invalid_argument);
}

TEST_CASE("decomposition checks for n = 3, 4") {
  for (int n : {3, 4}) {
    DecompositionReport rep = verify_decomposition(n);
    CHECK(rep.ok());
    CHECK(rep.lattice_quotient_dim == colength_of(n) - 1);
  }
  CHECK_THROWS_AS(verify_decomposition(6), std::invalid_argument);
}

TEST_CASE("unimodular fixture") {
  for (int n = 3; n <= 12; ++n) {
    IntMatrix u = uv_fixture_u(n);
    IntMatrix v = uv_fixture_v(n);
    CHECK(oracle::bareiss_det(u) == 1);
    CHECK(oracle::bareiss_det(v) == 1);
    CHECK(u * relation_matrix(n) * v == expected_urv(n));
  }
}

TEST_CASE("2n-generator and n-generator lattices have the same invariants") {
  for (int n = 3; n <= 12; ++n) {
    IdealFamilyInstance inst = make_instance(n);
    std::vector<std::vector<Int>> square(inst.lattice_gens.begin(), inst.lattice_gens.begin() + n);
    CHECK(cokernel_invariants(inst.lattice_gens, n) == cokernel_invariants(square, n));
    CHECK(cokernel_invariants(square, n).factors == expected_invariant_factors(n));
  }
}

TEST_CASE("binomial vanishing edge cases") {
  VarietyPoint pt{{0, 0, 0}};
  CHECK_FALSE(binomial_vanishes_at(Polynomial::parse("x1", 3), pt, 2));
  CHECK(binomial_vanishes_at(Polynomial::zero(3), pt, 2));
  CHECK_THROWS_AS(binomial_vanishes_at(Polynomial::parse("x1 + x2", 3), pt, 2), std::invalid_argument);
  CHECK_THROWS_AS(binomial_vanishes_at(Polynomial::parse("x1 - x2", 4), pt, 2), std::invalid_argument);
}
