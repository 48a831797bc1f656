#include "binperm/quotient_basis.hpp"

#include <stdexcept>

#include "binperm/ideal_family.hpp"

namespace binperm {

namespace {

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("quotient basis requires n >= 3");
}

}  // namespace

std::vector<int> BasisMonomial::subset() const {
  std::vector<int> vars;
  for (int i = 0; i < 32 && (mask_ >> i) != 0; ++i) {
    if (mask_ >> i & 1u) vars.push_back(i + 2);
  }
  return vars;
}

bool BasisMonomial::valid_for(int n) const {
  if (n < 3) return false;
  if (mask_ >= (1u << (n - 2))) return false;
  if (b_ == 2 * n - 4) return mask_ == 0;  // the top element
  return b_ >= 0 && b_ <= 2 * n - 5;
}

std::vector<BasisMonomial> enumerate_basis(int n) {
  require_n(n);
  std::vector<BasisMonomial> out;
  out.reserve((static_cast<std::size_t>(2 * n - 4) << (n - 2)) + 1);
  for (int b = 0; b <= 2 * n - 5; ++b)
    for (unsigned t = 0; t < (1u << (n - 2)); ++t) out.emplace_back(b, t);
  out.push_back(BasisMonomial::top(n));
  return out;
}

int index_of(const BasisMonomial& m, int n) {
  require_n(n);
  if (!m.valid_for(n)) throw std::invalid_argument("index_of: not a basis monomial for this n");
  if (m.is_constant()) throw std::invalid_argument("index_of: the constant has no index in B'");
  return m.b() * (1 << (n - 2)) + static_cast<int>(m.t_mask());
}

BasisMonomial monomial_at(int r, int n) {
  require_n(n);
  Int top = colength_of(n) - 1;
  if (r < 1 || Int(r) > top) throw std::invalid_argument("monomial_at: index out of range");
  int block = 1 << (n - 2);
  BasisMonomial m(r / block, static_cast<unsigned>(r % block));
  return m;
}

Monomial to_monomial(const BasisMonomial& m, int n) {
  require_n(n);
  if (!m.valid_for(n)) throw std::invalid_argument("to_monomial: not a basis monomial for this n");
  std::vector<int> e(n, 0);
  e[n - 1] = m.b();
  for (int v : m.subset()) e[v - 1] = 1;
  return Monomial(std::move(e));
}

Polynomial to_polynomial(const BasisMonomial& m, int n) { return Polynomial::from_monomial(to_monomial(m, n)); }

BasisMonomial from_monomial(const Monomial& m, int n) {
  require_n(n);
  if (m.nvars() != n) throw std::invalid_argument("from_monomial: dimension mismatch");
  if (m.exponent(1) != 0) throw std::invalid_argument("from_monomial: x1 exponent must be zero");
  unsigned mask = 0;
  for (int v = 2; v <= n - 1; ++v) {
    int e = m.exponent(v);
    if (e > 1) throw std::invalid_argument("from_monomial: not square-free in x2..x_{n-1}");
    if (e == 1) mask |= 1u << (v - 2);
  }
  BasisMonomial bm(m.exponent(n), mask);
  if (!bm.valid_for(n)) throw std::invalid_argument("from_monomial: not a basis monomial");
  return bm;
}

}  // namespace binperm
