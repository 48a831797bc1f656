#include "binperm/permutation.hpp"

#include <stdexcept>

namespace binperm {

long long CycleType::point_count() const {
  long long total = 0;
  for (auto& [len, cnt] : counts) total += static_cast<long long>(len) * cnt;
  return total;
}

Int CycleType::order() const {
  Int l(1);
  for (auto& [len, cnt] : counts) {
    Int v(len);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

std::string CycleType::str() const {
  std::string s;
  for (auto& [len, cnt] : counts) {
    if (!s.empty()) s += ' ';
    s += std::to_string(len);
    if (cnt > 1) s += '^' + std::to_string(cnt);
  }
  return s.empty() ? "-" : s;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("Permutation: empty image array");
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("Permutation: image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::fixed_point_count() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == i) ++c;
  return c;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> visited(img_.size(), 0);
  for (int s = 0; s < degree(); ++s) {
    if (visited[s]) continue;
    std::vector<int> cyc;
    int x = s;
    while (!visited[x]) {
      visited[x] = 1;
      cyc.push_back(x);
      x = img_[x];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  CycleType t;
  for (const auto& c : cycles()) ++t.counts[static_cast<int>(c.size())];
  return t;
}

Int Permutation::order() const { return cycle_type().order(); }

std::string Permutation::oneline_str() const {
  std::string s;
  for (int i = 0; i < degree(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i] + 1);
  }
  return s;
}

std::string Permutation::cycle_str() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(first.degree());
  for (int i = 0; i < first.degree(); ++i) img[i] = then(first(i));
  return Permutation(std::move(img));
}

}  // namespace binperm
