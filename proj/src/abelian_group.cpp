#include "binperm/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace binperm {

namespace {

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("group requires n >= 3");
}

long long mod_pos(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupElement::GroupElement(int n) : n_(n), bits_(n - 2, 0), c_(0) { require_n(n); }

GroupElement::GroupElement(int n, std::vector<std::uint8_t> bits, long long c) : n_(n), bits_(std::move(bits)) {
  require_n(n);
  if (static_cast<int>(bits_.size()) != n - 2) throw std::invalid_argument("GroupElement: bit vector must have length n-2");
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("GroupElement: bits must be 0 or 1");
  c_ = static_cast<int>(mod_pos(c, modulus()));
}

bool GroupElement::is_identity() const {
  if (c_ != 0) return false;
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (n_ != other.n_) throw std::invalid_argument("GroupElement: mismatched n");
  std::vector<std::uint8_t> b(bits_);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] ^= other.bits_[i];
  return GroupElement(n_, std::move(b), static_cast<long long>(c_) + other.c_);
}

GroupElement GroupElement::inverse() const {
  return GroupElement(n_, bits_, -static_cast<long long>(c_));
}

GroupElement GroupElement::pow(long long k) const {
  std::vector<std::uint8_t> b(bits_.size(), 0);
  if (mod_pos(k, 2) == 1) b = bits_;
  return GroupElement(n_, std::move(b), static_cast<long long>(c_) * (k % modulus()));
}

long long GroupElement::order() const {
  long long bit_order = std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; }) ? 2 : 1;
  long long c_order = c_ == 0 ? 1 : modulus() / std::gcd(static_cast<long long>(c_), static_cast<long long>(modulus()));
  return std::lcm(bit_order, c_order);
}

std::string GroupElement::str() const {
  std::string s;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    if (!s.empty()) s += '*';
    s += 'h' + std::to_string(i + 1);
  }
  if (c_ != 0) {
    if (!s.empty()) s += '*';
    s += "tau";
    if (c_ != 1) s += '^' + std::to_string(c_);
  }
  return s.empty() ? "e" : s;
}

GeneratorImages generator_images(int n) {
  require_n(n);
  GeneratorImages out;
  out.n = n;
  for (int i = 1; i <= n - 2; ++i) {
    std::vector<std::uint8_t> b(n - 2, 0);
    b[i - 1] = 1;
    out.g.emplace_back(n, std::move(b), 1);
  }
  out.g.emplace_back(n, std::vector<std::uint8_t>(n - 2, 1), n - 1);
  out.g.emplace_back(n, std::vector<std::uint8_t>(n - 2, 0), 1);
  return out;
}

bool verify_presentation(const GeneratorImages& images) {
  int n = images.n;
  if (static_cast<int>(images.g.size()) != n) return false;
  GroupElement e(n);

  // h_i^2 = e and tau^{2n-4} = e.
  for (int i = 1; i <= n - 2; ++i) {
    std::vector<std::uint8_t> b(n - 2, 0);
    b[i - 1] = 1;
    GroupElement h(n, std::move(b), 0);
    if (!(h * h == e)) return false;
  }
  GroupElement tau(n, std::vector<std::uint8_t>(n - 2, 0), 1);
  if (!(tau.pow(2 * n - 4) == e)) return false;

  // Commutativity of the images.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(images.g[i] * images.g[j] == images.g[j] * images.g[i])) return false;

  // prod_{j != k} g_j = g_k, for every k.
  GroupElement total(n);
  for (const auto& g : images.g) total = total * g;
  for (int k = 0; k < n; ++k) {
    if (!(total * images.g[k].inverse() == images.g[k])) return false;
    // g_1 g_2 ... g_n = g_k^2.
    if (!(total == images.g[k] * images.g[k])) return false;
  }

  // h_{n-1} = h_1 ... h_{n-2} g_n^{n-2}, with h_i = g_i g_n^{-1}.
  GroupElement h_last = images.g[n - 2] * images.g[n - 1].inverse();
  GroupElement rhs(n);
  for (int i = 1; i <= n - 2; ++i) rhs = rhs * (images.g[i - 1] * images.g[n - 1].inverse());
  rhs = rhs * images.g[n - 1].pow(n - 2);
  return h_last == rhs;
}

bool verify_presentation(int n) { return verify_presentation(generator_images(n)); }

GroupElement intertwiner(const BasisMonomial& m, int n) {
  require_n(n);
  if (!m.valid_for(n)) throw std::invalid_argument("intertwiner: not a basis monomial for this n");
  if (m.is_constant()) throw std::invalid_argument("intertwiner: the constant is not in B'");
  GeneratorImages images = generator_images(n);
  GroupElement acc(n);
  for (int v : m.subset()) acc = acc * images.of_var(v);
  acc = acc * images.of_var(n).pow(m.b());
  return acc;
}

std::vector<GroupElement> all_elements(int n) {
  require_n(n);
  std::vector<GroupElement> out;
  int mod = 2 * n - 4;
  out.reserve(static_cast<std::size_t>(mod) << (n - 2));
  for (unsigned mask = 0; mask < (1u << (n - 2)); ++mask) {
    std::vector<std::uint8_t> bits(n - 2);
    for (int i = 0; i < n - 2; ++i) bits[i] = (mask >> i) & 1u;
    for (int c = 0; c < mod; ++c) out.emplace_back(n, bits, c);
  }
  return out;
}

CycleType left_multiplication_cycle_type(const GroupElement& a) {
  std::vector<GroupElement> elems = all_elements(a.n());
  std::map<GroupElement, int> pos;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos.emplace(elems[i], i);
  std::vector<int> img(elems.size());
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) img[i] = pos.at(a * elems[i]);
  return Permutation(std::move(img)).cycle_type();
}

std::vector<Int> invariant_factors_from_order_stats(const std::map<long long, long long>& histogram) {
  long long order = 0;
  for (auto& [o, cnt] : histogram) order += cnt;
  if (order <= 0) throw std::invalid_argument("invariant factors: empty histogram");

  std::vector<long long> primes;
  {
    long long rest = order;
    for (long long p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
    if (rest > 1) primes.push_back(rest);
  }

  // Primary decomposition per prime: from the counts of elements whose
  // order divides p^k, recover the type partition of the p-part.
  std::vector<std::pair<long long, std::vector<long long>>> primary;  // (p, parts descending)
  for (long long p : primes) {
    std::vector<long long> sigma;  // sigma[k] = log_p #{x : ord(x) | p^{k+1}}
    for (long long k = 1;; ++k) {
      long long pk = 1;
      for (long long i = 0; i < k; ++i) pk *= p;
      long long count = 0;
      for (auto& [o, cnt] : histogram)
        if (pk % o == 0) count += cnt;
      long long exp = 0, v = count;
      while (v > 1 && v % p == 0) v /= p, ++exp;
      if (v != 1) throw std::logic_error("invariant factors: order statistics are not a p-group layer (group not abelian?)");
      sigma.push_back(exp);
      if (sigma.size() > 1 && sigma[sigma.size() - 1] == sigma[sigma.size() - 2]) break;
    }
    std::vector<long long> parts;
    long long prev = 0;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      long long ge = sigma[k] - prev;  // number of parts >= k+1
      prev = sigma[k];
      if (parts.empty()) {
        parts.assign(ge, 0);
      }
      for (long long i = 0; i < ge; ++i) ++parts[i];
    }
    parts.erase(std::remove(parts.begin(), parts.end(), 0LL), parts.end());
    std::sort(parts.rbegin(), parts.rend());
    if (!parts.empty()) primary.emplace_back(p, parts);
  }

  std::size_t width = 0;
  for (auto& [p, parts] : primary) width = std::max(width, parts.size());
  std::vector<Int> factors(width, Int(1));
  for (auto& [p, parts] : primary) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Int pe(1);
      for (long long k = 0; k < parts[i]; ++k) pe *= static_cast<long>(p);
      factors[i] *= pe;  // align largest with largest
    }
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
  return factors;
}

ClosureResult closure(const std::vector<Permutation>& generators, std::size_t max_order) {
  if (generators.empty()) throw std::invalid_argument("closure: no generators");
  int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("closure: ground-set mismatch");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (compose(generators[i], generators[j]) != compose(generators[j], generators[i]))
        throw std::invalid_argument("closure: generators do not commute");

  int ngen = static_cast<int>(generators.size());
  std::map<Permutation, int> index;
  std::vector<Permutation> elems;
  std::vector<std::vector<Int>> exponent;  // BFS word for each element

  elems.push_back(Permutation::identity(degree));
  exponent.emplace_back(ngen, Int(0));
  index.emplace(elems.back(), 0);

  // Defect vectors a(x) + e_j - a(x g_j) span the full relation lattice
  // {a : prod g_j^{a_j} = id}; tree edges contribute zero.
  std::set<std::vector<Int>> defects;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int j = 0; j < ngen; ++j) {
      Permutation next = compose(elems[head], generators[j]);
      std::vector<Int> word = exponent[head];
      word[j] += 1;
      auto it = index.find(next);
      if (it == index.end()) {
        if (elems.size() >= max_order) throw std::runtime_error("closure: exceeded the element cap");
        index.emplace(next, static_cast<int>(elems.size()));
        elems.push_back(std::move(next));
        exponent.push_back(std::move(word));
      } else {
        std::vector<Int> defect = word;
        bool nonzero = false;
        for (int k = 0; k < ngen; ++k) {
          defect[k] -= exponent[it->second][k];
          if (defect[k] != 0) nonzero = true;
        }
        if (nonzero) defects.insert(std::move(defect));
      }
    }
  }

  ClosureResult out;
  out.order = elems.size();
  for (const auto& e : elems) {
    Int o = e.order();
    if (!o.fits_slong_p()) throw std::runtime_error("closure: element order out of range");
    ++out.order_histogram[o.get_si()];
  }
  out.invariant_factors = invariant_factors_from_order_stats(out.order_histogram);

  CokernelInvariants coker =
      cokernel_invariants(std::vector<std::vector<Int>>(defects.begin(), defects.end()), ngen);
  if (coker.free_rank != 0) throw std::logic_error("closure: relation lattice does not have full rank");
  out.invariant_factors_relations = coker.factors;
  return out;
}

}  // namespace binperm
