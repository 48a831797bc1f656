#include <doctest.h>

#include <random>
#include <set>

#include "binperm/abelian_group.hpp"
#include "binperm/automorphisms.hpp"
#include "binperm/checks.hpp"
#include "binperm/companion.hpp"
#include "oracles.hpp"

using namespace binperm;

TEST_CASE("group element arithmetic") {
  GroupElement e(5);
  CHECK(e.is_identity());
  GroupElement a(5, {1, 0, 1}, 4);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a * e == a);
  CHECK(a.pow(0).is_identity());
  CHECK(a.pow(3) == a * a * a);
  CHECK_THROWS_AS(a * GroupElement(4), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement(5, {1, 0}, 0), std::invalid_argument);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> c(0, 5);
  for (int t = 0; t < 50; ++t) {
    GroupElement x(5, {static_cast<std::uint8_t>(bit(rng)), static_cast<std::uint8_t>(bit(rng)),
                       static_cast<std::uint8_t>(bit(rng))},
                   c(rng));
    CHECK((x * x.inverse()).is_identity());
    CHECK(x.pow(x.order()).is_identity());
  }
}

TEST_CASE("every companion generator has order 2(n-2)") {
  for (int n = 3; n <= 12; ++n) {
    GeneratorImages g = generator_images(n);
    for (int j = 1; j <= n; ++j) CHECK(g.of_var(j).order() == 2 * (n - 2));
  }
}

TEST_CASE("n=3 is the Klein four-group") {
  auto elems = all_elements(3);
  CHECK(elems.size() == 4);
  GeneratorImages g = generator_images(3);
  // g_1 g_2 = g_3 and siblings.
  CHECK(g.of_var(1) * g.of_var(2) == g.of_var(3));
  CHECK(g.of_var(1) * g.of_var(3) == g.of_var(2));
  CHECK(g.of_var(2) * g.of_var(3) == g.of_var(1));
  // {e, h_1, tau, h_1 tau} is the whole group.
  std::set<GroupElement> s(elems.begin(), elems.end());
  CHECK(s.size() == 4);
  CHECK(g.of_var(2) == GroupElement(3, {1}, 0));  // h_1 tau^2 = h_1
  CHECK(g.of_var(3) == GroupElement(3, {0}, 1));  // tau
}

TEST_CASE("presentation holds and perturbations are caught") {
  for (int n = 3; n <= 12; ++n) CHECK(verify_presentation(n));
  GeneratorImages bad = generator_images(4);
  bad.g[3] = bad.g[3] * bad.g[3];  // g_n replaced by tau^2
  CHECK_FALSE(verify_presentation(bad));
}

TEST_CASE("intertwiner values for n=3") {
  // psi(x_3) = tau, psi(x_2) = h_1, psi(x_2 x_3) = h_1 tau, psi(x_3^2) = e.
  CHECK(intertwiner(BasisMonomial(1, 0), 3) == GroupElement(3, {0}, 1));
  CHECK(intertwiner(BasisMonomial(0, 1), 3) == GroupElement(3, {1}, 0));
  CHECK(intertwiner(BasisMonomial(1, 1), 3) == GroupElement(3, {1}, 1));
  CHECK(intertwiner(BasisMonomial::top(3), 3).is_identity());
  CHECK_THROWS_AS(intertwiner(BasisMonomial::constant(), 3), std::invalid_argument);
}

TEST_CASE("psi is a bijection intertwining the multiplication operators") {
  for (int n = 3; n <= 9; ++n) {
    QuotientRing q(n);
    GeneratorImages g = generator_images(n);
    std::set<GroupElement> image;
    long long points = static_cast<long long>(q.basis().size()) - 1;
    for (long long r = 1; r <= points; ++r) {
      BasisMonomial m = monomial_at(static_cast<int>(r), n);
      GroupElement v = intertwiner(m, n);
      image.insert(v);
      for (int j = 1; j <= n; ++j) CHECK(intertwiner(q.multiply_basis(j, m), n) == g.of_var(j) * v);
    }
    CHECK(static_cast<long long>(image.size()) == points);
  }
}

TEST_CASE("cycle types transport along psi") {
  for (int n = 3; n <= 9; ++n) {
    QuotientRing q(n);
    GeneratorImages g = generator_images(n);
    for (int j = 1; j <= n; ++j) {
      CHECK(left_multiplication_cycle_type(g.of_var(j)) == reduced_permutation(q, j).cycle_type());
    }
  }
}

TEST_CASE("closure of the companion permutations") {
  auto perms = [](int n) {
    QuotientRing q(n);
    std::vector<Permutation> out;
    for (int j = 1; j <= n; ++j) out.push_back(reduced_permutation(q, j));
    return out;
  };

  ClosureResult c3 = closure(perms(3));
  CHECK(c3.order == 4);
  CHECK(c3.order_histogram == std::map<long long, long long>{{1, 1}, {2, 3}});
  CHECK(c3.invariant_factors == std::vector<Int>{2, 2});
  CHECK(c3.invariant_factors_relations == std::vector<Int>{2, 2});

  ClosureResult c4 = closure(perms(4));
  CHECK(c4.order == 16);
  CHECK(c4.invariant_factors == std::vector<Int>{2, 2, 4});
  CHECK(c4.invariant_factors_relations == std::vector<Int>{2, 2, 4});

  ClosureResult c6 = closure(perms(6));
  CHECK(c6.order == 128);
  CHECK(c6.invariant_factors == std::vector<Int>{2, 2, 2, 2, 8});
  CHECK(c6.invariant_factors_relations == std::vector<Int>{2, 2, 2, 2, 8});

  CHECK_THROWS_AS(closure(perms(5), 10), std::runtime_error);
  // Non-commuting generators are rejected.
  CHECK_THROWS_AS(closure({Permutation({1, 0, 2}), Permutation({2, 1, 0})}), std::invalid_argument);
}

TEST_CASE("invariant factors from order statistics") {
  // C_2 x C_4: orders 1:1, 2:3, 4:4.
  std::map<long long, long long> h{{1, 1}, {2, 3}, {4, 4}};
  CHECK(invariant_factors_from_order_stats(h) == std::vector<Int>{2, 4});
  // C_6: orders 1,2,3,6 with one each... phi counts.
  std::map<long long, long long> c6{{1, 1}, {2, 1}, {3, 2}, {6, 2}};
  CHECK(invariant_factors_from_order_stats(c6) == std::vector<Int>{6});
}

TEST_CASE("arithmetic helpers") {
  CHECK(gl2_order(1) == 1);
  CHECK(gl2_order(2) == 6);
  CHECK(gl2_order(4) == 20160);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(10) == 4);
  CHECK(nu2(12) == 2);
  CHECK(nu2(2) == 1);
  CHECK(nu2(7) == 0);
  CHECK_THROWS_AS(gl2_order(0), std::invalid_argument);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
  CHECK_THROWS_AS(nu2(0), std::invalid_argument);
}

TEST_CASE("aut orders match the table") {
  const std::vector<std::string> expected = {"6",
                                             "192",
                                             "40320",
                                             "20643840",
                                             "80634839040",
                                             "330280300707840",
                                             "32088382615270195200",
                                             "2803925657432463350169600"};
  for (int n = 3; n <= 10; ++n) {
    AutReport rep = aut_report(n);
    CHECK(rep.order.get_str() == expected[n - 3]);
    CHECK(rep.r == n - 2);
    CHECK(rep.s == nu2(2 * n - 4));
    CHECK((2LL * n - 4) == (1LL << rep.s) * rep.m_odd);
    CHECK(rep.m_odd % 2 == 1);
    if (n % 2 == 1) CHECK(rep.s == 1);
    if (n % 2 == 0) CHECK(rep.s >= 2);
  }
}

TEST_CASE("brute-force automorphism counts for n = 3 and 4") {
  CHECK(oracle::brute_force_aut_count(3) == 6);
  CHECK(oracle::brute_force_aut_count(4) == 192);
  CHECK(Int(oracle::brute_force_aut_count(3)) == aut_report(3).order);
  CHECK(Int(oracle::brute_force_aut_count(4)) == aut_report(4).order);
}

TEST_CASE("three independent computations of the invariant factors agree") {
  for (int n = 3; n <= 8; ++n) {
    QuotientRing q(n);
    std::vector<Permutation> gens;
    for (int j = 1; j <= n; ++j) gens.push_back(reduced_permutation(q, j));
    ClosureResult c = closure(gens);
    CokernelInvariants coker = cokernel_invariants(make_instance(n).lattice_gens, n);
    CHECK(c.invariant_factors == expected_invariant_factors(n));
    CHECK(c.invariant_factors_relations == expected_invariant_factors(n));
    CHECK(coker.factors == expected_invariant_factors(n));
    CHECK(coker.free_rank == 0);
  }
}
