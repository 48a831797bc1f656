#include "binperm/companion.hpp"

#include <map>
#include <stdexcept>

namespace binperm {

std::vector<std::vector<int>> CompanionMatrix::dense() const {
  std::vector<std::vector<int>> m(size(), std::vector<int>(size(), 0));
  for (int r = 0; r < size(); ++r) m[r][row_image[r]] = 1;
  return m;
}

QuotientRing::QuotientRing(int n) : inst_(make_instance(n)), basis_(enumerate_basis(n)) {}

BasisMonomial QuotientRing::multiply_basis(int var, const BasisMonomial& m) const {
  if (var < 1 || var > n()) throw std::invalid_argument("multiply_basis: variable index out of range");
  if (!m.valid_for(n())) throw std::invalid_argument("multiply_basis: not a basis monomial for this n");
  Polynomial prod = Polynomial::from_monomial(Monomial::variable(var, n()) * to_monomial(m, n()));
  Polynomial nf = normal_form(prod, inst_.groebner);
  if (nf.term_count() != 1 || nf.leading_coeff() != 1)
    throw std::logic_error("multiply_basis: normal form is not a single monic monomial");
  BasisMonomial image = from_monomial(nf.leading_monomial(), n());
  if (image.is_constant()) throw std::logic_error("multiply_basis: image left the invariant subspace");
  return image;
}

std::vector<BasisMonomial> example_basis_order(int n) {
  // The explicit listings printed for n = 3 and n = 4, as (b, mask).
  if (n == 3) {
    return {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}};
  }
  if (n == 4) {
    return {{0, 0}, {1, 0}, {0, 2}, {0, 1}, {1, 3}, {2, 0}, {1, 2}, {1, 1}, {0, 3},
            {2, 3}, {3, 1}, {3, 2}, {3, 0}, {2, 2}, {2, 1}, {3, 3}, {4, 0}};
  }
  throw std::invalid_argument("example_basis_order: explicit listings exist only for n = 3 and n = 4");
}

namespace {

std::map<BasisMonomial, int> position_index(const std::vector<BasisMonomial>& order) {
  std::map<BasisMonomial, int> pos;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    if (!pos.emplace(order[i], i).second) throw std::invalid_argument("basis order contains duplicates");
  }
  return pos;
}

}  // namespace

CompanionMatrix full_matrix(const QuotientRing& q, int var) { return full_matrix(q, var, q.basis()); }

CompanionMatrix full_matrix(const QuotientRing& q, int var, const std::vector<BasisMonomial>& order) {
  if (order.size() != q.basis().size()) throw std::invalid_argument("full_matrix: order must list the whole basis");
  auto pos = position_index(order);
  CompanionMatrix m;
  m.n = q.n();
  m.var = var;
  m.row_image.reserve(order.size());
  for (const auto& bm : order) {
    auto it = pos.find(q.multiply_basis(var, bm));
    if (it == pos.end()) throw std::invalid_argument("full_matrix: order is not the basis of this n");
    m.row_image.push_back(it->second);
  }
  return m;
}

Permutation reduced_permutation(const QuotientRing& q, int var) {
  // Canonical reduced order is monomial_at(1..c_n-1); image lookups are
  // pure index arithmetic.
  int points = static_cast<int>(q.basis().size()) - 1;
  std::vector<int> img(points);
  for (int r = 1; r <= points; ++r) img[r - 1] = index_of(q.multiply_basis(var, monomial_at(r, q.n())), q.n()) - 1;
  return Permutation(std::move(img));
}

Permutation reduced_permutation(const QuotientRing& q, int var, const std::vector<BasisMonomial>& order) {
  if (order.size() != q.basis().size()) throw std::invalid_argument("reduced_permutation: order must list the whole basis");
  if (!order.front().is_constant())
    throw std::invalid_argument("reduced_permutation: order must start with the constant");
  std::vector<BasisMonomial> rest(order.begin() + 1, order.end());
  auto pos = position_index(rest);
  std::vector<int> img;
  img.reserve(rest.size());
  for (const auto& bm : rest) {
    auto it = pos.find(q.multiply_basis(var, bm));
    if (it == pos.end()) throw std::invalid_argument("reduced_permutation: order is not the basis of this n");
    img.push_back(it->second);
  }
  return Permutation(std::move(img));
}

bool commute_all(const QuotientRing& q) {
  int n = q.n();
  std::vector<Permutation> perms;
  std::vector<CompanionMatrix> fulls;
  perms.reserve(n);
  fulls.reserve(n);
  for (int j = 1; j <= n; ++j) {
    perms.push_back(reduced_permutation(q, j));
    fulls.push_back(full_matrix(q, j));
  }
  auto compose_rows = [](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
    return out;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (compose(perms[i], perms[j]) != compose(perms[j], perms[i])) return false;
      // Full matrices are row-functional, so the 0/1 matrix product
      // T_i T_j is again row-functional with map g o f.
      if (compose_rows(fulls[i].row_image, fulls[j].row_image) !=
          compose_rows(fulls[j].row_image, fulls[i].row_image))
        return false;
    }
  }
  return true;
}

std::string CharPoly::factored_str() const {
  std::string s;
  for (auto& [len, cnt] : factors.counts) {
    std::string base = "(t^" + std::to_string(len) + " - 1)";
    if (len == 1) base = "(t - 1)";
    s += base;
    if (cnt > 1) s += '^' + std::to_string(cnt);
  }
  return s.empty() ? "1" : s;
}

std::string CharPoly::expanded_str() const {
  std::string s;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    if (coeffs[k] == 0) continue;
    Int a = abs(coeffs[k]);
    if (s.empty()) {
      if (coeffs[k] < 0) s += '-';
    } else {
      s += coeffs[k] < 0 ? " - " : " + ";
    }
    if (k == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += "t";
      if (k != 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

CharPoly char_poly(const Permutation& p) {
  CharPoly out;
  out.factors = p.cycle_type();
  out.coeffs = {Int(1)};
  for (auto& [len, cnt] : out.factors.counts) {
    for (long long rep = 0; rep < cnt; ++rep) {
      // Multiply by (t^len - 1).
      std::vector<Int> next(out.coeffs.size() + len, Int(0));
      for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
        next[k + len] += out.coeffs[k];
        next[k] -= out.coeffs[k];
      }
      out.coeffs = std::move(next);
    }
  }
  return out;
}

}  // namespace binperm
