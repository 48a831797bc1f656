#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "binperm/monomial.hpp"

namespace binperm {

using Int = mpz_class;
using Rat = mpq_class;

struct Term {
  Rat coeff;
  Monomial mono;
  bool operator==(const Term& other) const = default;
};

/// Multivariate polynomial with exact rational coefficients.
/// Terms are kept strictly descending in lex order with no zero
/// coefficients; the zero polynomial is the empty term list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial from_terms(int nvars, std::vector<Term> terms);
  static Polynomial from_monomial(const Monomial& m, const Rat& coeff = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const;  // throws on zero polynomial
  const Monomial& leading_monomial() const;
  const Rat& leading_coeff() const;
  Rat constant_term() const;  // 0 when absent

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;

  bool operator==(const Polynomial& other) const = default;

  std::string str() const;
  static Polynomial parse(const std::string& text, int nvars);

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rat& c, const Polynomial& p);
Polynomial operator*(const Term& t, const Polynomial& p);

}  // namespace binperm
