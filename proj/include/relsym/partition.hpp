#pragma once

// Integer partitions, exponent vectors and the enumerations built on them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relsym/arith.hpp"

namespace relsym {

/// A weakly decreasing sequence of positive integers. Serves as a cycle
/// type, a Young subgroup shape, an irreducible character label and a
/// tableau shape.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw InputError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw InputError("partition parts must be weakly decreasing");
      }
      weight_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros; accepts any multiset of non-negative sizes.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// The one-row partition (m).
  static Partition row(int m) { return m == 0 ? Partition() : Partition({m}); }

  /// The one-column partition (1^m).
  static Partition column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based), or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// An element of the set of m-tuples of non-negative integers with sum d;
/// the exponent of the monomial x_1^a_1 ... x_m^a_m.
class ExponentVector {
public:
  ExponentVector() = default;

  explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InputError("exponent vector needs at least one entry");
    for (int e : entries_) {
      if (e < 0) throw InputError("exponent vector entries must be non-negative");
      degree_ += e;
    }
  }

  ExponentVector(std::initializer_list<int> entries) : ExponentVector(std::vector<int>(entries)) {}

  const std::vector<int>& entries() const { return entries_; }
  int m() const { return static_cast<int>(entries_.size()); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

private:
  std::vector<int> entries_;
  int degree_ = 0;
};

/// True iff pi is dominated by mu (pi ⊴ mu): every prefix sum of pi is at
/// most the matching prefix sum of mu, the shorter one padded with zeros.
/// For equal weights this is the same as checking only the first
/// min(len pi, len mu) prefixes, since the exhausted side stays at the total.
inline bool dominates(const Partition& mu, const Partition& pi) {
  if (mu.weight() != pi.weight()) {
    throw InputError("dominance compares partitions of equal weight, got " + mu.to_string() +
                     " and " + pi.to_string());
  }
  const std::size_t n = static_cast<std::size_t>(std::max(mu.length(), pi.length()));
  int smu = 0;
  int spi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    smu += mu[i];
    spi += pi[i];
    if (spi > smu) return false;
  }
  return true;
}

/// M(alpha): how often each distinct value occurs in alpha, sorted descending.
inline Partition multiplicity_partition(const ExponentVector& alpha) {
  std::map<int, int> counts;
  for (int e : alpha.entries()) ++counts[e];
  std::vector<int> mult;
  mult.reserve(counts.size());
  for (const auto& [value, k] : counts) mult.push_back(k);
  return Partition::from_unsorted(std::move(mult));
}

/// k_1! k_2! ... k_s!, the order of the Young subgroup S_mu.
inline BigInt multiplicity_factorial(const Partition& mu) {
  BigInt r = 1;
  for (int k : mu) r *= factorial(static_cast<unsigned>(k));
  return r;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // the remaining slots can hold at most slots*p
    if (static_cast<long long>(p) * slots < remaining) break;
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of m (at most max_length parts if given), reverse
/// lexicographic, starting with (m). m = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(int m, std::optional<int> max_length = std::nullopt) {
  if (m < 0) throw InputError("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  const int slots = max_length.value_or(std::max(m, 1));
  if (slots < 1) throw InputError("max_length must be positive");
  detail::partitions_rec(m, m, slots, cur, out);
  return out;
}

/// |Γ⁺_{m,d}| = C(d+m-1, m-1).
inline BigInt gamma_size(int m, int d) {
  return binomial(static_cast<unsigned>(d + m - 1), static_cast<unsigned>(m - 1));
}

/// Every m-tuple of non-negative integers summing to d, in lexicographic order.
inline std::vector<ExponentVector> enumerate_gamma(int m, int d, std::size_t cap = kDefaultGammaCap) {
  if (m < 1) throw InputError("m must be at least 1");
  if (d < 0) throw InputError("d must be non-negative");
  const BigInt size = gamma_size(m, d);
  if (size > cap) {
    throw ResourceError("refusing to enumerate " + size.str() + " exponent vectors (cap " +
                        std::to_string(cap) + ")");
  }
  std::vector<ExponentVector> out;
  out.reserve(static_cast<std::size_t>(size));
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto& self, int pos, int remaining) -> void {
    if (pos == m - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// One representative per S_m-orbit of Γ⁺_{m,d}: the weakly decreasing
/// vectors, in reverse lexicographic order.
inline std::vector<ExponentVector> orbit_representatives(int m, int d) {
  if (m < 1) throw InputError("m must be at least 1");
  if (d < 0) throw InputError("d must be non-negative");
  std::vector<ExponentVector> out;
  for (const Partition& p : enumerate_partitions(d, m)) {
    std::vector<int> v(p.parts());
    v.resize(static_cast<std::size_t>(m), 0);
    out.emplace_back(std::move(v));
  }
  return out;
}

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle type lambda.
inline BigInt centralizer_order(const Partition& lambda) {
  std::map<int, unsigned> mult;
  for (int p : lambda) ++mult[p];
  BigInt z = 1;
  for (const auto& [part, k] : mult) {
    z *= boost::multiprecision::pow(BigInt(part), k);
    z *= factorial(k);
  }
  return z;
}

/// Number of permutations of S_m with cycle type lambda.
inline BigInt class_size(const Partition& lambda) {
  return factorial(static_cast<unsigned>(lambda.weight())) / centralizer_order(lambda);
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) return out;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos || tok.size() > 9) {
      throw InputError(std::string("malformed ") + what + " '" + std::string(text) + "'");
    }
    out.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses "3,2,1" (surrounding parentheses tolerated).
inline Partition parse_partition(std::string_view text) {
  return Partition(detail::parse_int_list(text, "partition"));
}

/// Parses "2,0,0".
inline ExponentVector parse_exponent_vector(std::string_view text) {
  return ExponentVector(detail::parse_int_list(text, "exponent vector"));
}

}  // namespace relsym
