#include "binperm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace binperm {

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  // Collect like monomials, drop zeros, sort descending.
  std::map<Monomial, Rat, std::greater<Monomial>> acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw std::invalid_argument("Polynomial: dimension mismatch");
    acc[t.mono] += t.coeff;
  }
  Polynomial p(nvars);
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back(Term{c, m});
  }
  return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rat& coeff) {
  Polynomial p(m.nvars());
  if (coeff != 0) p.terms_.push_back(Term{coeff, m});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (is_zero()) throw std::invalid_argument("Polynomial: zero polynomial has no leading term");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }

const Rat& Polynomial::leading_coeff() const { return leading_term().coeff; }

Rat Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rat(0);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial: dimension mismatch");
  // Merge of two descending term lists.
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = lex_cmp(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) out.terms_.push_back(Term{s, terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial: dimension mismatch");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
  return from_terms(nvars_, std::move(prod));
}

Polynomial operator*(const Rat& c, const Polynomial& p) {
  if (c == 0) return Polynomial::zero(p.nvars());
  std::vector<Term> scaled;
  scaled.reserve(p.terms().size());
  for (const auto& t : p.terms()) scaled.push_back(Term{c * t.coeff, t.mono});
  return Polynomial::from_terms(p.nvars(), std::move(scaled));
}

Polynomial operator*(const Term& t, const Polynomial& p) {
  if (t.coeff == 0) return Polynomial::zero(p.nvars());
  std::vector<Term> scaled;
  scaled.reserve(p.terms().size());
  for (const auto& u : p.terms()) scaled.push_back(Term{t.coeff * u.coeff, t.mono * u.mono});
  return Polynomial::from_terms(p.nvars(), std::move(scaled));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool neg = t.coeff < 0;
    if (i == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    Rat a = abs(t.coeff);
    if (t.mono.is_one()) {
      s += a.get_str();
    } else if (a == 1) {
      s += t.mono.str();
    } else {
      s += a.get_str();
      s += '*';
      s += t.mono.str();
    }
  }
  return s;
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("Polynomial::parse: expected digits at position " + std::to_string(start));
    return s.substr(start, pos - start);
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars) {
  Scanner sc{text};
  std::vector<Term> terms;
  if (sc.eof()) throw std::invalid_argument("Polynomial::parse: empty input");

  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    if (sc.accept('+')) {
      if (first) throw std::invalid_argument("Polynomial::parse: leading '+'");
    } else if (sc.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("Polynomial::parse: expected '+' or '-' between terms");
    }
    first = false;

    Rat coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      std::string num = sc.digits();
      std::string den = "1";
      if (sc.accept('/')) den = sc.digits();
      coeff = Rat(Int(num), Int(den));
      coeff.canonicalize();
      have_coeff = true;
      if (sc.peek() == '*') sc.accept('*');
    }

    std::vector<int> exps(nvars, 0);
    bool have_var = false;
    while (sc.peek() == 'x') {
      sc.accept('x');
      int idx = std::stoi(sc.digits());
      if (idx < 1 || idx > nvars) throw std::invalid_argument("Polynomial::parse: variable x" + std::to_string(idx) + " out of range");
      int e = 1;
      if (sc.accept('^')) e = std::stoi(sc.digits());
      exps[idx - 1] += e;
      have_var = true;
      if (sc.peek() == '*') {
        sc.accept('*');
        if (sc.peek() != 'x') throw std::invalid_argument("Polynomial::parse: expected variable after '*'");
      } else {
        break;
      }
    }
    if (!have_coeff && !have_var) throw std::invalid_argument("Polynomial::parse: empty term");
    terms.push_back(Term{sign * coeff, Monomial(std::move(exps))});
  }
  return from_terms(nvars, std::move(terms));
}

}  // namespace binperm
