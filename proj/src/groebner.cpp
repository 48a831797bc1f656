#include "binperm/groebner.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace binperm {

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("GroebnerBasis: empty generator list");
  lms_.reserve(gens_.size());
  for (const auto& g : gens_) {
    if (g.is_zero()) throw std::invalid_argument("GroebnerBasis: zero generator");
    if (g.nvars() != gens_.front().nvars()) throw std::invalid_argument("GroebnerBasis: dimension mismatch");
    lms_.push_back(g.leading_monomial());
  }
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  if (p.nvars() != G.nvars()) throw std::invalid_argument("normal_form: dimension mismatch");
  Polynomial h = p;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced = false;
    for (int i = 0; i < G.size(); ++i) {
      if (G.leading_monomials()[i].divides(lt.mono)) {
        Term q{lt.coeff / G.generators()[i].leading_coeff(), lt.mono.divided_by(G.leading_monomials()[i])};
        h = h - q * G.generators()[i];
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // Leading monomial is irreducible; it and everything below it that
      // ends up in the remainder stays in descending order.
      remainder.push_back(lt);
      h = h - Polynomial::from_monomial(lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(p.nvars(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
  if (f.nvars() != g.nvars()) throw std::invalid_argument("s_polynomial: dimension mismatch");
  Monomial m = lcm(f.leading_monomial(), g.leading_monomial());
  Term tf{Rat(1) / f.leading_coeff(), m.divided_by(f.leading_monomial())};
  Term tg{Rat(1) / g.leading_coeff(), m.divided_by(g.leading_monomial())};
  return tf * f - tg * g;
}

namespace {

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return (Rat(1) / p.leading_coeff()) * p;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const std::function<void(const Polynomial&)>& observer) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(g);
  }
  if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  std::deque<std::pair<int, int>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto coprime = [](const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.exponents()[i] > 0 && b.exponents()[i] > 0) return false;
    return true;
  };

  GroebnerBasis ctx(basis);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    // Buchberger's first criterion: coprime leading terms reduce to zero.
    if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
    Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), ctx);
    if (r.is_zero()) continue;
    r = monic(r);
    if (observer) observer(r);
    basis.push_back(r);
    ctx = GroebnerBasis(basis);
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  return GroebnerBasis(std::move(basis));
}

GroebnerBasis reduce_basis(const GroebnerBasis& G) {
  if (!is_groebner(G)) throw std::invalid_argument("reduce_basis: input is not a Groebner basis");

  // Minimalize: drop generators whose leading monomial is divisible by
  // another kept one. Ascending scan keeps the divisor, drops multiples
  // (and collapses duplicated leading monomials).
  std::vector<Polynomial> sorted = G.generators();
  std::sort(sorted.begin(), sorted.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() < b.leading_monomial(); });
  std::vector<Polynomial> minimal;
  for (const auto& g : sorted) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(monic(g));
  }

  // Interreduce tails. Tail monomials are lex-smaller than the leading
  // monomial, hence never divisible by it, so reducing against the full
  // minimal set is safe.
  GroebnerBasis ctx(minimal);
  std::vector<Polynomial> reduced;
  for (const auto& g : minimal) {
    Polynomial head = Polynomial::from_monomial(g.leading_monomial(), g.leading_coeff());
    reduced.push_back(head + normal_form(g - head, ctx));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() > b.leading_monomial(); });
  return GroebnerBasis(std::move(reduced));
}

bool is_groebner(const GroebnerBasis& G) {
  for (int i = 0; i < G.size(); ++i) {
    for (int j = i + 1; j < G.size(); ++j) {
      if (!normal_form(s_polynomial(G.generators()[i], G.generators()[j]), G).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace binperm
