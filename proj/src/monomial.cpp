#include "binperm/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace binperm {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
}

Monomial Monomial::one(int nvars) {
  if (nvars < 1) throw std::invalid_argument("Monomial::one: nvars must be positive");
  return Monomial(std::vector<int>(nvars, 0));
}

Monomial Monomial::variable(int index, int nvars) { return power(index, 1, nvars); }

Monomial Monomial::power(int index, int exp, int nvars) {
  if (index < 1 || index > nvars) throw std::invalid_argument("Monomial: variable index out of range");
  std::vector<int> e(nvars, 0);
  e[index - 1] = exp;
  return Monomial(std::move(e));
}

int Monomial::exponent(int index) const {
  if (index < 1 || index > nvars()) throw std::invalid_argument("Monomial: variable index out of range");
  return exps_[index - 1];
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  for (int e : exps_)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("Monomial: dimension mismatch");
  std::vector<int> e(exps_);
  for (int i = 0; i < nvars(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("Monomial: dimension mismatch");
  for (int i = 0; i < nvars(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("Monomial: quotient is not a monomial");
  std::vector<int> e(exps_);
  for (int i = 0; i < nvars(); ++i) e[i] -= divisor.exps_[i];
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  int c = lex_cmp(*this, other);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i + 1);
    if (exps_[i] != 1) {
      s += '^';
      s += std::to_string(exps_[i]);
    }
  }
  return s.empty() ? "1" : s;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("lex_cmp: dimension mismatch");
  for (int i = 0; i < a.nvars(); ++i) {
    if (a.exponents()[i] != b.exponents()[i]) return a.exponents()[i] < b.exponents()[i] ? -1 : 1;
  }
  return 0;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("lcm: dimension mismatch");
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

}  // namespace binperm
