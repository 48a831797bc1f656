#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "binperm/ideal_family.hpp"
#include "binperm/quotient_basis.hpp"
#include "oracles.hpp"

using namespace binperm;

TEST_CASE("basis sets for n = 3 and n = 4 match the printed ones") {
  std::set<std::string> got3;
  for (const auto& m : enumerate_basis(3)) got3.insert(to_monomial(m, 3).str());
  CHECK(got3 == std::set<std::string>{"1", "x3", "x2", "x2*x3", "x3^2"});

  std::set<std::string> got4;
  for (const auto& m : enumerate_basis(4)) got4.insert(to_monomial(m, 4).str());
  auto printed = oracle::printed_basis_n4();
  CHECK(got4 == std::set<std::string>(printed.begin(), printed.end()));
  CHECK(got4.size() == 17);
}

TEST_CASE("basis size is the colength for n up to 14") {
  for (int n = 3; n <= 14; ++n) {
    CHECK(Int(static_cast<long>(enumerate_basis(n).size())) == colength_of(n));
  }
  CHECK(enumerate_basis(5).size() == 49);
  CHECK_THROWS_AS(enumerate_basis(2), std::invalid_argument);
}

TEST_CASE("canonical order starts at the constant and ends at the top element") {
  for (int n : {3, 4, 5}) {
    auto basis = enumerate_basis(n);
    CHECK(basis.front().is_constant());
    CHECK(basis.back() == BasisMonomial::top(n));
    // b-major, t-minor: the canonical index is the position.
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(index_of(basis[i], n) == static_cast<int>(i));
  }
}

TEST_CASE("index bijection") {
  // The decoded examples: r = 1 is x_2 for n = 3, the top element sits at
  // the last index.
  CHECK(to_monomial(monomial_at(1, 3), 3).str() == "x2");
  CHECK(to_monomial(monomial_at(2, 3), 3).str() == "x3");
  CHECK(to_monomial(monomial_at(4, 3), 3).str() == "x3^2");
  CHECK(index_of(BasisMonomial::top(3), 3) == 4);
  CHECK(index_of(BasisMonomial::top(4), 4) == 16);
  CHECK(index_of(BasisMonomial(0, 1), 4) == 1);

  CHECK_THROWS_AS(index_of(BasisMonomial::constant(), 4), std::invalid_argument);
  CHECK_THROWS_AS(monomial_at(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(monomial_at(5, 3), std::invalid_argument);

  for (int n = 3; n <= 10; ++n) {
    long long top = Int(colength_of(n) - 1).get_si();
    for (long long r = 1; r <= top; ++r) CHECK(index_of(monomial_at(static_cast<int>(r), n), n) == r);
    auto basis = enumerate_basis(n);
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(monomial_at(index_of(basis[i], n), n) == basis[i]);
  }
}

TEST_CASE("to_polynomial") {
  CHECK(to_polynomial(BasisMonomial(1, 1), 3).str() == "x2*x3");
  CHECK(to_polynomial(BasisMonomial(2, 0), 3).str() == "x3^2");
  CHECK(to_polynomial(BasisMonomial(0, 3), 4).str() == "x2*x3");
  CHECK(to_polynomial(BasisMonomial(0, 0), 4).str() == "1");
}

TEST_CASE("no basis element is reducible by S_n") {
  for (int n = 3; n <= 8; ++n) {
    IdealFamilyInstance inst = make_instance(n);
    for (const auto& m : enumerate_basis(n)) {
      Monomial mono = to_monomial(m, n);
      for (const auto& lm : inst.groebner.leading_monomials()) CHECK_FALSE(lm.divides(mono));
    }
  }
}

TEST_CASE("B is exactly the staircase of S_n (exhaustive scan, n <= 5)") {
  for (int n = 3; n <= 5; ++n) {
    IdealFamilyInstance inst = make_instance(n);
    std::set<std::vector<int>> basis_set;
    for (const auto& m : enumerate_basis(n)) basis_set.insert(to_monomial(m, n).exponents());

    // Every monomial within the pure-power box that S_n cannot reduce
    // must already be in B.
    std::vector<int> exps(n, 0);
    long long scanned = 0;
    std::function<void(int)> walk = [&](int var) {
      if (var == n) {
        Monomial mono{exps};
        bool reducible = false;
        for (const auto& lm : inst.groebner.leading_monomials())
          if (lm.divides(mono)) reducible = true;
        ++scanned;
        CHECK(basis_set.count(exps) == (reducible ? 0u : 1u));
        return;
      }
      int bound = var == 0 ? 1 : (var == n - 1 ? 2 * n - 3 : 2);
      for (int e = 0; e < bound; ++e) {
        exps[var] = e;
        walk(var + 1);
      }
      exps[var] = 0;
    };
    walk(0);
    CHECK(scanned == (1LL << (n - 2)) * (2 * n - 3));
  }
}

TEST_CASE("from_monomial rejects non-basis monomials") {
  CHECK_THROWS_AS(from_monomial(Monomial::variable(1, 3), 3), std::invalid_argument);
  CHECK_THROWS_AS(from_monomial(Monomial::power(2, 2, 3), 3), std::invalid_argument);
  CHECK_THROWS_AS(from_monomial(Monomial::power(3, 4, 3), 3), std::invalid_argument);
  CHECK(from_monomial(Monomial::power(3, 2, 3), 3) == BasisMonomial::top(3));
}
