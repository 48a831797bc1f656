#include "binperm/ideal_family.hpp"

#include <stdexcept>

namespace binperm {

namespace {

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("family requires n >= 3");
}

Polynomial binomial(const Monomial& plus, const Monomial& minus) {
  return Polynomial::from_monomial(plus) - Polynomial::from_monomial(minus);
}

// Product of all variables except x_i (all of them when skip = 0).
Monomial product_excluding(int skip, int n) {
  std::vector<int> e(n, 1);
  if (skip >= 1) e[skip - 1] = 0;
  return Monomial(std::move(e));
}

}  // namespace

int heaviside(int k) { return k >= 1 ? 1 : 0; }

Int colength_of(int n) {
  require_n(n);
  Int c = Int(n - 2) << (n - 1);
  return c + 1;
}

std::vector<Polynomial> family_generators(int n) {
  require_n(n);
  std::vector<Polynomial> gens;
  gens.reserve(n);
  for (int i = 1; i <= n; ++i) gens.push_back(binomial(product_excluding(i, n), Monomial::variable(i, n)));
  return gens;
}

std::vector<Polynomial> groebner_generators(int n) {
  require_n(n);
  std::vector<Polynomial> g;
  g.reserve(2 * n - 2);
  g.push_back(binomial(Monomial::power(n, 2 * n - 3, n), Monomial::variable(n, n)));
  for (int k = n - 1; k >= 2; --k) {
    g.push_back(binomial(Monomial::variable(k, n) * Monomial::power(n, 2 * (n - 2), n), Monomial::variable(k, n)));
    g.push_back(binomial(Monomial::power(k, 2, n), Monomial::power(n, 2, n)));
  }
  g.push_back(binomial(Monomial::variable(1, n), product_excluding(1, n)));
  return g;
}

IdealFamilyInstance make_instance(int n) {
  require_n(n);
  IdealFamilyInstance inst;
  inst.n = n;
  inst.generators = family_generators(n);
  inst.groebner = GroebnerBasis(groebner_generators(n));
  inst.colength = colength_of(n);

  // Leading coefficients are +-1 throughout this family; the polyring
  // contracts assert rather than assume it.
  for (const auto& g : inst.generators) {
    if (abs(g.leading_coeff()) != 1) throw std::logic_error("family generator is not monic up to sign");
  }

  int h = heaviside(n - 3);
  // v_i = 2e_i - (e_1 + ... + e_n), the columns of the relation matrix.
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> v(n, -1);
    v[i - 1] = 1;
    inst.lattice_gens.push_back(std::move(v));
  }
  // v_{n+1} = (2n-4) e_n.
  {
    std::vector<Int> v(n, 0);
    v[n - 1] = 2 * n - 4;
    inst.lattice_gens.push_back(std::move(v));
  }
  // v_{n+1+i} = 2 e_i - 2 H(n-3) e_n.
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<Int> v(n, 0);
    v[i - 1] = 2;
    v[n - 1] -= 2 * h;
    inst.lattice_gens.push_back(std::move(v));
  }

  // Lattice-ideal binomials, matching the vectors above term by term.
  for (int i = 1; i <= n; ++i)
    inst.lattice_ideal_gens.push_back(binomial(Monomial::variable(i, n), product_excluding(i, n)));
  inst.lattice_ideal_gens.push_back(binomial(Monomial::power(n, 2 * n - 4, n), Monomial::one(n)));
  for (int i = 1; i <= n - 1; ++i)
    inst.lattice_ideal_gens.push_back(binomial(Monomial::power(i, 2, n), Monomial::power(n, 2 * h, n)));

  return inst;
}

IntMatrix relation_matrix(int n) {
  require_n(n);
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = (i == j) ? 1 : -1;
  return r;
}

bool verify_membership_list(int n) {
  require_n(n);
  if (n > 7) throw std::invalid_argument("verify_membership_list: guarded to n <= 7 (runs Buchberger from scratch)");
  GroebnerBasis from_scratch = buchberger(family_generators(n));
  for (const auto& m : groebner_generators(n)) {
    if (!normal_form(m, from_scratch).is_zero()) return false;
  }
  return true;
}

}  // namespace binperm
