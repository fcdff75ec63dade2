#pragma once

// Irreducible characters of S_m and class functions on its conjugacy classes.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "relsym/arith.hpp"
#include "relsym/partition.hpp"
#include "relsym/tableaux.hpp"

namespace relsym {

namespace detail {

/// Murnaghan–Nakayama evaluation for a fixed cycle type. Shapes are handled
/// as beta-sets (first-column hook lengths); removing a border strip of
/// length r moves one bead from b to b - r, with sign (-1)^(beads jumped).
/// The memo is keyed on (strip index, remaining shape) and may be reused
/// across every shape evaluated on the same cycle type.
class MurnaghanNakayama {
public:
  explicit MurnaghanNakayama(const Partition& cycle_type)
      : cycles_(cycle_type.parts()) {}  // already decreasing

  BigInt operator()(const Partition& shape) { return eval(shape.parts(), 0); }

private:
  BigInt eval(const std::vector<int>& shape, std::size_t depth) {
    if (depth == cycles_.size()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(depth, shape);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = cycles_[depth];
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int from = beta[i];
      const int to = from - r;
      if (to < 0) continue;
      if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta) jumped += (b > to && b < from);
      std::vector<int> moved(beta);
      moved[i] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> next;
      for (int k = 0; k < len; ++k) {
        const int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
        if (part > 0) next.push_back(part);
      }
      BigInt sub = eval(next, depth + 1);
      if (jumped % 2) total -= sub;
      else total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> cycles_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

inline void require_same_weight(const Partition& a, const Partition& b, const char* what) {
  if (a.weight() != b.weight()) {
    throw InputError(std::string(what) + ": " + a.to_string() + " and " + b.to_string() +
                     " are partitions of different integers");
  }
}

}  // namespace detail

/// chi^pi evaluated on a permutation of cycle type lambda.
inline BigInt irreducible_character_value(const Partition& pi, const Partition& lambda) {
  detail::require_same_weight(pi, lambda, "character value");
  if (pi.weight() < 1) throw InputError("characters are defined for m >= 1");
  return detail::MurnaghanNakayama(lambda)(pi);
}

/// The full table chi^pi(lambda) for S_m; rows and columns both follow
/// enumerate_partitions(m).
class CharacterTable {
public:
  explicit CharacterTable(int m) : m_(m), partitions_(enumerate_partitions(m)) {
    const std::size_t n = partitions_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(partitions_[i], i);
    values_.assign(n, std::vector<BigInt>(n));
    for (std::size_t c = 0; c < n; ++c) {
      detail::MurnaghanNakayama column(partitions_[c]);
      for (std::size_t r = 0; r < n; ++r) values_[r][c] = column(partitions_[r]);
    }
  }

  int m() const { return m_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t size() const { return partitions_.size(); }

  std::size_t index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      throw InputError(p.to_string() + " is not a partition of " + std::to_string(m_));
    }
    return it->second;
  }

  const BigInt& operator()(std::size_t row, std::size_t col) const { return values_[row][col]; }
  const BigInt& value(const Partition& pi, const Partition& lambda) const {
    return values_[index(pi)][index(lambda)];
  }
  const std::vector<BigInt>& row(std::size_t r) const { return values_[r]; }

  /// chi^pi at the identity.
  const BigInt& degree(const Partition& pi) const { return value(pi, Partition::column(m_)); }

private:
  int m_;
  std::vector<Partition> partitions_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<BigInt>> values_;
};

/// The table for S_m, built at most once per m for the life of the process.
inline std::shared_ptr<const CharacterTable> character_table(int m, int bound = kDefaultCharacterTableBound) {
  if (m < 1) throw InputError("character tables need m >= 1");
  if (m > bound) {
    throw ResourceError("character table for m = " + std::to_string(m) + " exceeds the bound " +
                        std::to_string(bound));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const CharacterTable>(m);
  return slot;
}

namespace detail {

/// Character value through the cached table when it is in range.
inline BigInt chi(const Partition& pi, const Partition& lambda) {
  if (pi.weight() <= kDefaultCharacterTableBound && pi.weight() == lambda.weight()) {
    return character_table(pi.weight())->value(pi, lambda);
  }
  return irreducible_character_value(pi, lambda);
}

}  // namespace detail

/// A rational-valued function on the conjugacy classes of S_m, stored by
/// cycle type.
class ClassFunction {
public:
  /// The zero class function on S_m.
  explicit ClassFunction(int m) : m_(m) {
    if (m < 1) throw InputError("class functions need m >= 1");
    for (const Partition& p : enumerate_partitions(m)) values_.emplace(p, Rational(0));
  }

  /// Evaluates f on every cycle type of S_m.
  template <typename F>
  static ClassFunction from(int m, F&& f) {
    ClassFunction cf(m);
    for (auto& [lambda, v] : cf.values_) v = Rational(f(lambda));
    return cf;
  }

  int m() const { return m_; }
  const std::map<Partition, Rational>& values() const& { return values_; }
  std::map<Partition, Rational> values() && { return std::move(values_); }

  const Rational& operator()(const Partition& lambda) const {
    auto it = values_.find(lambda);
    if (it == values_.end()) {
      throw InputError(lambda.to_string() + " is not a cycle type of S_" + std::to_string(m_));
    }
    return it->second;
  }

  void set(const Partition& lambda, Rational v) {
    (void)(*this)(lambda);
    values_[lambda] = std::move(v);
  }

  /// Values in enumerate_partitions(m) order.
  std::vector<Rational> ordered_values() const {
    std::vector<Rational> out;
    for (const Partition& p : enumerate_partitions(m_)) out.push_back(values_.at(p));
    return out;
  }

  bool is_integral() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return is_integer(kv.second); });
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    require_same_degree(o);
    for (auto& [lambda, v] : values_) v += o.values_.at(lambda);
    return *this;
  }

  ClassFunction& operator*=(const Rational& s) {
    for (auto& [lambda, v] : values_) v *= s;
    return *this;
  }

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(const Rational& s, ClassFunction a) { return a *= s; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

  void require_same_degree(const ClassFunction& o) const {
    if (o.m_ != m_) {
      throw InputError("class functions on S_" + std::to_string(m_) + " and S_" + std::to_string(o.m_));
    }
  }

private:
  int m_;
  std::map<Partition, Rational> values_;
};

/// chi^pi as a class function.
inline ClassFunction irreducible_character(const Partition& pi) {
  return ClassFunction::from(pi.weight(), [&](const Partition& lambda) { return detail::chi(pi, lambda); });
}

/// [phi, psi] = (1/m!) sum_lambda |class(lambda)| phi(lambda) psi(lambda).
/// Every supported class function is rational valued, so psi(s^-1) = psi(s).
inline Rational inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  phi.require_same_degree(psi);
  Rational sum = 0;
  for (const auto& [lambda, v] : phi.values()) sum += Rational(class_size(lambda)) * v * psi(lambda);
  return sum / Rational(factorial(static_cast<unsigned>(phi.m())));
}

/// Cycle types occurring in the Young subgroup S_mu, with the number of
/// elements of each.
inline std::map<Partition, BigInt> young_subgroup_cycle_types(const Partition& mu) {
  std::map<std::vector<int>, BigInt> acc{{{}, BigInt(1)}};
  for (int block : mu) {
    std::map<std::vector<int>, BigInt> next;
    for (const Partition& rho : enumerate_partitions(block)) {
      const BigInt size = class_size(rho);
      for (const auto& [parts, count] : acc) {
        std::vector<int> merged(parts);
        merged.insert(merged.end(), rho.begin(), rho.end());
        std::sort(merged.begin(), merged.end(), std::greater<>());
        next[std::move(merged)] += count * size;
      }
    }
    acc = std::move(next);
  }
  std::map<Partition, BigInt> out;
  for (auto& [parts, count] : acc) out.emplace(Partition(parts), std::move(count));
  return out;
}

/// [chi^pi, 1]_{S_mu}: the average of chi^pi over the Young subgroup S_mu,
/// summed class by class over S_mu's cycle types.
inline BigInt restricted_trivial_inner_product(const Partition& pi, const Partition& mu) {
  detail::require_same_weight(pi, mu, "restricted inner product");
  BigInt sum = 0;
  for (const auto& [lambda, count] : young_subgroup_cycle_types(mu)) sum += count * detail::chi(pi, lambda);
  const BigInt order = multiplicity_factorial(mu);
  if (sum % order != 0) {
    throw ConsistencyError("average of chi" + pi.to_string() + " over S" + mu.to_string() + " is not integral");
  }
  return sum / order;
}

/// (1_{S_mu})^{S_m} = sum over pi dominating mu of K_{pi,mu} chi^pi.
inline ClassFunction induced_trivial_character(const Partition& mu) {
  const int m = mu.weight();
  ClassFunction out(m);
  for (const Partition& pi : enumerate_partitions(m)) {
    if (!dominates(pi, mu)) continue;
    const BigInt k = kostka(pi, mu);
    if (k != 0) out += Rational(k) * irreducible_character(pi);
  }
  return out;
}

}  // namespace relsym
