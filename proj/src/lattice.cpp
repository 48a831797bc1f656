#include "binperm/lattice.hpp"

#include <functional>
#include <stdexcept>

namespace binperm {

namespace {

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("lattice operations require n >= 3");
}

void verify_point(const VarietyPoint& pt, const IdealFamilyInstance& inst) {
  int modulus = 2 * inst.n - 4;
  for (const auto& g : inst.lattice_ideal_gens) {
    if (!binomial_vanishes_at(g, pt, modulus))
      throw std::logic_error("enumerate_variety: emitted point misses a lattice-ideal generator");
  }
}

}  // namespace

std::vector<VarietyPoint> enumerate_variety(int n) {
  require_n(n);
  IdealFamilyInstance inst = make_instance(n);
  std::vector<VarietyPoint> points;
  int modulus = 2 * n - 4;

  if (n == 3) {
    // H(0) = 0 degenerates the square relations to x_i^2 = 1; the points
    // are the sign vectors with x_1 x_2 x_3 = 1, zeta = -1.
    for (int e1 = 0; e1 <= 1; ++e1)
      for (int e2 = 0; e2 <= 1; ++e2) points.push_back(VarietyPoint{{e1, e2, (e1 + e2) % 2}});
  } else {
    // x_i = eps_i x_n with the sign pattern constrained by
    // eps = x_n^{-(n-2)}, i.e. prod eps = (-1)^k since zeta^{n-2} = -1.
    for (int k = 0; k < modulus; ++k) {
      for (unsigned signs = 0; signs < (1u << (n - 1)); ++signs) {
        int parity = 0;
        for (int i = 0; i < n - 1; ++i) parity ^= (signs >> i) & 1u;
        if (parity != (k & 1)) continue;
        std::vector<int> exps(n);
        for (int i = 0; i < n - 1; ++i) exps[i] = (k + (n - 2) * ((signs >> i) & 1u)) % modulus;
        exps[n - 1] = k;
        points.push_back(VarietyPoint{std::move(exps)});
      }
    }
  }

  for (const auto& pt : points) verify_point(pt, inst);
  return points;
}

bool binomial_vanishes_at(const Polynomial& binom, const VarietyPoint& pt, int modulus) {
  if (binom.is_zero()) return true;
  if (binom.nvars() != static_cast<int>(pt.exps.size()))
    throw std::invalid_argument("binomial_vanishes_at: dimension mismatch");
  auto phase = [&](const Monomial& m) {
    long long s = 0;
    for (int i = 0; i < m.nvars(); ++i) s += static_cast<long long>(m.exponents()[i]) * pt.exps[i];
    return static_cast<int>(s % modulus);
  };
  if (binom.term_count() == 1) return false;  // torus points never kill a monomial
  if (binom.term_count() != 2 || binom.terms()[0].coeff + binom.terms()[1].coeff != 0)
    throw std::invalid_argument("binomial_vanishes_at: expected a difference of two monomials");
  return phase(binom.terms()[0].mono) == phase(binom.terms()[1].mono);
}

Int standard_monomial_count(const GroebnerBasis& G) {
  int n = G.nvars();
  // A finite staircase needs a pure power of every variable among the
  // leading monomials.
  std::vector<int> bound(n, -1);
  for (const auto& lm : G.leading_monomials()) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (lm.exponents()[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = i;
      }
    }
    if (pure && support >= 0) {
      int e = lm.exponents()[support];
      if (bound[support] < 0 || e < bound[support]) bound[support] = e;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (bound[i] < 0) throw std::invalid_argument("standard_monomial_count: initial ideal is not zero-dimensional");
  }

  Int count(0);
  std::vector<int> exps(n, 0);
  // DFS over the box below the pure-power bounds.
  auto reducible = [&](const std::vector<int>& e) {
    for (const auto& lm : G.leading_monomials()) {
      bool div = true;
      for (int i = 0; i < n; ++i) {
        if (lm.exponents()[i] > e[i]) {
          div = false;
          break;
        }
      }
      if (div) return true;
    }
    return false;
  };
  std::function<void(int)> walk = [&](int var) {
    if (var == n) {
      if (!reducible(exps)) ++count;
      return;
    }
    for (int e = 0; e < bound[var]; ++e) {
      exps[var] = e;
      walk(var + 1);
    }
    exps[var] = 0;
  };
  walk(0);
  return count;
}

DecompositionReport verify_decomposition(int n) {
  require_n(n);
  if (n > 5) throw std::invalid_argument("verify_decomposition: guarded to n <= 5 (runs Buchberger on I_{L_n})");
  IdealFamilyInstance inst = make_instance(n);
  DecompositionReport rep;

  GroebnerBasis lattice_basis = reduce_basis(buchberger(inst.lattice_ideal_gens));

  rep.ideal_contained_in_lattice_ideal = true;
  rep.generators_vanish_at_origin = true;
  for (const auto& f : inst.generators) {
    if (!normal_form(f, lattice_basis).is_zero()) rep.ideal_contained_in_lattice_ideal = false;
    if (f.constant_term() != 0) rep.generators_vanish_at_origin = false;
  }

  rep.m_times_lattice_ideal_in_ideal = true;
  for (const auto& h : inst.lattice_ideal_gens) {
    for (int k = 1; k <= n; ++k) {
      Polynomial xk = Polynomial::from_monomial(Monomial::variable(k, n));
      if (!normal_form(xk * h, inst.groebner).is_zero()) rep.m_times_lattice_ideal_in_ideal = false;
    }
  }

  rep.lattice_quotient_dim = standard_monomial_count(lattice_basis);
  rep.dimension_match = rep.lattice_quotient_dim == inst.colength - 1 &&
                        standard_monomial_count(inst.groebner) == inst.colength;
  return rep;
}

IntMatrix uv_fixture_u(int n) {
  require_n(n);
  IntMatrix u = IntMatrix::identity(n);
  for (int i = 1; i < n; ++i) u.at(i, 0) = 1;  // I + f e_1^T
  return u;
}

IntMatrix uv_fixture_v(int n) {
  require_n(n);
  IntMatrix v = IntMatrix::identity(n);
  for (int j = 1; j < n; ++j) v.at(0, j) = 1;  // I + e_1 f^T
  return v;
}

IntMatrix expected_urv(int n) {
  require_n(n);
  IntMatrix m(n, n);
  m.at(0, 0) = 1;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) m.at(i, j) = (i == j) ? 0 : -2;  // -2(Q_{n-1} - I)
  return m;
}

}  // namespace binperm
