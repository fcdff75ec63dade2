#pragma once

// Relative symmetric polynomials for a permutation group G ≤ S_m and an
// integer-valued character chi of G, built from first principles: the
// idempotent T(G, chi) = (chi(1)/|G|) sum_sigma chi(sigma) sigma applied to
// monomials, their norms, and the dimension of the image by exact rank.
//
// Conventions: sigma acts on exponent vectors by
// (sigma alpha)_i = alpha_{sigma(i)}, and on polynomials so that the
// monomial X^alpha goes to X^{sigma alpha}.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relsym/arith.hpp"
#include "relsym/characters.hpp"
#include "relsym/denumerant.hpp"
#include "relsym/partition.hpp"

namespace relsym {

/// A permutation of {0, ..., m-1} stored by images.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int x : image_) {
      if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || seen[static_cast<std::size_t>(x)]) {
        throw InputError("not a permutation");
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> image(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) image[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(image));
  }

  /// Builds a permutation from 1-based cycles.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) image[static_cast<std::size_t>(i)] = i;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int from = cycle[k];
        const int to = cycle[(k + 1) % cycle.size()];
        if (from < 1 || from > m || to < 1 || to > m) {
          throw InputError("cycle entry " + std::to_string(from < 1 || from > m ? from : to) +
                           " is outside 1.." + std::to_string(m));
        }
        if (used[static_cast<std::size_t>(from - 1)]) {
          throw InputError("point " + std::to_string(from) + " appears in two cycles");
        }
        used[static_cast<std::size_t>(from - 1)] = true;
        image[static_cast<std::size_t>(from - 1)] = to - 1;
      }
    }
    return Permutation(std::move(image));
  }

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> image(b.image_.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = a.image_[static_cast<std::size_t>(b.image_[i])];
    Permutation p;
    p.image_ = std::move(image);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    Permutation p;
    p.image_ = std::move(inv);
    return p;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t start = 0; start < image_.size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(image_[x])) {
        seen[x] = true;
        cycle.push_back(static_cast<int>(x) + 1);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  Partition cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    return Partition::from_unsorted(std::move(lengths));
  }

  /// Cycle notation without fixed points; "()" for the identity.
  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(c[k]);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  /// sigma alpha = (alpha_{sigma(1)}, ..., alpha_{sigma(m)}).
  ExponentVector act(const ExponentVector& alpha) const {
    if (alpha.m() != degree()) throw InputError("exponent vector length does not match the permutation degree");
    std::vector<int> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) out[i] = alpha[static_cast<std::size_t>(image_[i])];
    return ExponentVector(std::move(out));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.image_ <=> b.image_; }

private:
  std::vector<int> image_;
};

/// Parses cycle notation such as "(1 2)(3 4)" or "()" for a permutation of
/// {1..m}. Points inside a cycle are separated by spaces or commas.
inline Permutation parse_permutation(std::string_view text, int m) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  if (i == text.size()) throw InputError("empty permutation; write () for the identity");
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw InputError("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i || j - i > 9) throw InputError("bad point in permutation '" + std::string(text) + "'");
      cycle.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(m, cycles);
}

/// Splits "(1 2),(1 2 3)" at the commas that sit outside parentheses and
/// parses each piece.
inline std::vector<Permutation> parse_permutation_list(std::string_view text, int m) {
  std::vector<Permutation> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw InputError("unbalanced parentheses in '" + std::string(text) + "'");
    if (c == ',' && depth == 0) {
      const std::string_view piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_permutation(piece, m));
      start = i + 1;
    }
  }
  if (depth != 0) throw InputError("unbalanced parentheses in '" + std::string(text) + "'");
  return out;
}

/// A subgroup of S_m with all of its elements listed. Element 0 is the identity.
class PermutationGroup {
public:
  int m() const { return m_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Permutation& p) const { return index_.contains(p); }

  /// Closure of the generators under composition, breadth first from the identity.
  friend PermutationGroup enumerate_group(std::vector<Permutation> generators, int m, std::size_t cap);

  /// A group given by its complete, closed element list.
  static PermutationGroup from_elements(int m, std::vector<Permutation> elements) {
    PermutationGroup g;
    g.m_ = m;
    const Permutation id = Permutation::identity(m);
    auto it = std::find(elements.begin(), elements.end(), id);
    if (it == elements.end()) throw InputError("element list lacks the identity");
    std::iter_swap(elements.begin(), it);
    g.generators_ = elements;
    for (const Permutation& p : elements) g.add(p);
    for (const Permutation& a : g.elements_) {
      for (const Permutation& b : g.elements_) {
        if (!g.contains(a * b)) throw InputError("element list is not closed under composition");
      }
    }
    return g;
  }

  /// Index classes[k] lists the element indices of the k-th conjugacy class,
  /// ordered by first occurrence; class 0 is the identity.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> done(elements_.size(), false);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (done[i]) continue;
      std::vector<std::size_t> cls;
      for (const Permutation& h : elements_) {
        const std::size_t j = index_.at(h * elements_[i] * h.inverse());
        if (!done[j]) {
          done[j] = true;
          cls.push_back(j);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

private:
  void add(const Permutation& p) {
    if (index_.emplace(p, elements_.size()).second) elements_.push_back(p);
  }

  int m_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
};

inline PermutationGroup enumerate_group(std::vector<Permutation> generators, int m,
                                        std::size_t cap = kDefaultGroupCap) {
  if (m < 1) throw InputError("group degree must be at least 1");
  for (const Permutation& g : generators) {
    if (g.degree() != m) throw InputError("generator " + g.to_string() + " does not act on " + std::to_string(m) + " points");
  }
  const BigInt bound = factorial(static_cast<unsigned>(m));
  PermutationGroup group;
  group.m_ = m;
  group.generators_ = std::move(generators);
  group.add(Permutation::identity(m));
  for (std::size_t next = 0; next < group.elements_.size(); ++next) {
    for (const Permutation& g : group.generators_) {
      group.add(g * group.elements_[next]);
      if (group.elements_.size() > cap) {
        throw ResourceError("group has more than " + std::to_string(cap) + " elements");
      }
    }
  }
  if (bound % group.elements_.size() != 0) throw ConsistencyError("group order does not divide m!");
  return group;
}

/// S_m generated by (1 2) and (1 2 ... m).
inline PermutationGroup symmetric_group(int m, std::size_t cap = kDefaultGroupCap) {
  std::vector<Permutation> gens;
  if (m >= 2) {
    gens.push_back(Permutation::from_cycles(m, {{1, 2}}));
    std::vector<int> all(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    gens.push_back(Permutation::from_cycles(m, {all}));
  }
  return enumerate_group(std::move(gens), m, cap);
}

/// {sigma in G : sigma alpha = alpha}.
inline PermutationGroup stabilizer(const PermutationGroup& group, const ExponentVector& alpha) {
  if (alpha.m() != group.m()) throw InputError("exponent vector length does not match the group degree");
  std::vector<Permutation> fixing;
  for (const Permutation& s : group.elements()) {
    if (s.act(alpha) == alpha) fixing.push_back(s);
  }
  return PermutationGroup::from_elements(group.m(), std::move(fixing));
}

/// The orbit of alpha under G, sorted.
inline std::vector<ExponentVector> orbit(const PermutationGroup& group, const ExponentVector& alpha) {
  std::vector<ExponentVector> out;
  for (const Permutation& s : group.elements()) out.push_back(s.act(alpha));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// An integer-valued class function on a concrete permutation group, stored
/// per element in the group's element order.
class CharacterSpec {
public:
  /// Values given on conjugacy-class representatives. Every class must be
  /// covered; two representatives of one class must carry the same value.
  static CharacterSpec from_class_values(const PermutationGroup& group,
                                         const std::vector<std::pair<Permutation, BigInt>>& reps,
                                         bool require_irreducible = true) {
    const auto classes = group.conjugacy_classes();
    std::vector<std::size_t> class_of(group.order());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (std::size_t e : classes[k]) class_of[e] = k;
    }
    std::vector<std::optional<BigInt>> per_class(classes.size());
    for (const auto& [rep, value] : reps) {
      const auto idx = group.index_of(rep);
      if (!idx) throw InputError("character representative " + rep.to_string() + " is not in the group");
      auto& slot = per_class[class_of[*idx]];
      if (slot && *slot != value) {
        throw InputError("conflicting character values on the class of " + rep.to_string());
      }
      slot = value;
    }
    std::vector<BigInt> values(group.order());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (!per_class[k]) {
        throw InputError("no character value for the class of " + group.elements()[classes[k][0]].to_string());
      }
      for (std::size_t e : classes[k]) values[e] = *per_class[k];
    }
    return CharacterSpec(group, std::move(values), require_irreducible);
  }

  /// Evaluates f on every element.
  template <typename F>
  static CharacterSpec from_function(const PermutationGroup& group, F&& f, bool require_irreducible = true) {
    std::vector<BigInt> values;
    values.reserve(group.order());
    for (const Permutation& s : group.elements()) values.emplace_back(f(s));
    return CharacterSpec(group, std::move(values), require_irreducible);
  }

  static CharacterSpec trivial(const PermutationGroup& group) {
    return from_function(group, [](const Permutation&) { return BigInt(1); });
  }

  /// The restriction of chi^pi to G; irreducible at least when G = S_m.
  static CharacterSpec restricted(const PermutationGroup& group, const Partition& pi, bool require_irreducible = false) {
    if (pi.weight() != group.m()) throw InputError(pi.to_string() + " is not a partition of the group degree");
    return from_function(group, [&](const Permutation& s) { return detail::chi(pi, s.cycle_type()); },
                         require_irreducible);
  }

  const std::vector<BigInt>& values() const& { return values_; }
  std::vector<BigInt> values() && { return std::move(values_); }
  const BigInt& operator[](std::size_t element) const { return values_[element]; }
  const BigInt& degree() const { return values_[0]; }
  std::size_t group_order() const { return values_.size(); }

  /// sum_sigma chi(sigma) chi(sigma^-1) == |G|.
  static bool has_unit_norm(const PermutationGroup& group, const std::vector<BigInt>& values) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < group.order(); ++i) {
      sum += values[i] * values[*group.index_of(group.elements()[i].inverse())];
    }
    return sum == group.order();
  }

private:
  CharacterSpec(const PermutationGroup& group, std::vector<BigInt> values, bool require_irreducible)
      : values_(std::move(values)) {
    if (values_.size() != group.order()) throw InputError("character has the wrong number of values");
    if (values_[0] < 1) throw InputError("character degree chi(1) must be at least 1");
    for (const Permutation& h : group.elements()) {
      for (std::size_t i = 0; i < group.order(); ++i) {
        const std::size_t j = *group.index_of(h * group.elements()[i] * h.inverse());
        if (values_[i] != values_[j]) throw InputError("character values are not constant on conjugacy classes");
      }
    }
    if (require_irreducible && !has_unit_norm(group, values_)) {
      throw InputError("character does not have norm 1, so it is not irreducible");
    }
  }

  std::vector<BigInt> values_;
};

namespace detail {

inline void require_matching(const PermutationGroup& group, const CharacterSpec& chi) {
  if (chi.group_order() != group.order()) throw InputError("character belongs to a different group");
}

}  // namespace detail

/// A homogeneous polynomial of degree d in m variables with rational
/// coefficients, keyed by exponent vector. Zero coefficients are never stored.
struct SymmetrizedPolynomial {
  int m = 0;
  int d = 0;
  std::map<ExponentVector, Rational> coefficients;

  bool is_zero() const { return coefficients.empty(); }

  /// <q, q> in the basis where the monomials are orthonormal.
  Rational norm_squared() const {
    Rational s = 0;
    for (const auto& [beta, c] : coefficients) s += c * c;
    return s;
  }

  friend bool operator==(const SymmetrizedPolynomial&, const SymmetrizedPolynomial&) = default;
};

namespace detail {

/// sum_sigma chi(sigma) X^{sigma alpha}, unscaled and with integer coefficients.
inline std::map<ExponentVector, BigInt> raw_symmetrize(const PermutationGroup& group, const CharacterSpec& chi,
                                                      const ExponentVector& alpha) {
  std::map<ExponentVector, BigInt> acc;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (chi[i] == 0) continue;
    acc[group.elements()[i].act(alpha)] += chi[i];
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

}  // namespace detail

/// X^{alpha,*} = T(G, chi) X^alpha: the coefficient of X^beta is
/// (chi(1)/|G|) * sum over sigma with sigma alpha = beta of chi(sigma).
inline SymmetrizedPolynomial symmetrize_monomial(const PermutationGroup& group, const CharacterSpec& chi,
                                                 const ExponentVector& alpha) {
  detail::require_matching(group, chi);
  if (alpha.m() != group.m()) throw InputError("exponent vector length does not match the group degree");
  const Rational scale = Rational(chi.degree()) / Rational(group.order());
  SymmetrizedPolynomial out{alpha.m(), alpha.degree(), {}};
  for (const auto& [beta, c] : detail::raw_symmetrize(group, chi, alpha)) {
    out.coefficients.emplace(beta, scale * Rational(c));
  }
  return out;
}

/// T(G, chi) applied to an arbitrary polynomial, by linearity.
inline SymmetrizedPolynomial symmetrize(const PermutationGroup& group, const CharacterSpec& chi,
                                        const SymmetrizedPolynomial& q) {
  SymmetrizedPolynomial out{q.m, q.d, {}};
  for (const auto& [alpha, c] : q.coefficients) {
    for (const auto& [beta, v] : symmetrize_monomial(group, chi, alpha).coefficients) {
      out.coefficients[beta] += c * v;
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// [chi, 1]_H for a subgroup H given by its elements' indices in G.
inline Rational restricted_trivial_multiplicity(const PermutationGroup& group, const CharacterSpec& chi,
                                                const PermutationGroup& subgroup) {
  BigInt sum = 0;
  for (const Permutation& s : subgroup.elements()) sum += chi[*group.index_of(s)];
  return Rational(sum) / Rational(subgroup.order());
}

struct NormSquared {
  Rational formula;
  Rational direct;
};

/// ||X^{alpha,*}||^2 two ways: chi(1) [chi, 1]_{G_alpha} / [G : G_alpha], and
/// the sum of squared coefficients. Throws ConsistencyError if they differ.
inline NormSquared norm_squared(const PermutationGroup& group, const CharacterSpec& chi, const ExponentVector& alpha) {
  detail::require_matching(group, chi);
  const PermutationGroup stab = stabilizer(group, alpha);
  const Rational index = Rational(group.order()) / Rational(stab.order());
  NormSquared r;
  r.formula = Rational(chi.degree()) * restricted_trivial_multiplicity(group, chi, stab) / index;
  r.direct = symmetrize_monomial(group, chi, alpha).norm_squared();
  if (r.formula != r.direct) {
    throw ConsistencyError("norm of X^" + alpha.to_string() + "*: formula " + r.formula.str() + " vs direct " +
                           r.direct.str());
  }
  return r;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination, taking
/// the first nonzero entry in each column as pivot. All rows must have the
/// same length.
inline std::size_t exact_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const BigInt& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt f = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt v = p * a[i][j] - f * a[rank][j];
        if (v % prev != 0) throw ConsistencyError("fraction-free elimination produced an inexact division");
        a[i][j] = v / prev;
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// dim H_d(G, chi) as the rank of the matrix whose rows are the symmetrized
/// monomials X^{alpha,*}, alpha in Γ⁺_{m,d}, scaled by |G|/chi(1) to integers.
/// Rows from one G-orbit are supported on that orbit, so the matrix is block
/// diagonal after sorting by orbit and each block is reduced on its own.
inline std::size_t dimension_by_rank(const PermutationGroup& group, const CharacterSpec& chi, int d,
                                     std::size_t cap = kDefaultGammaCap) {
  detail::require_matching(group, chi);
  const std::vector<ExponentVector> gamma = enumerate_gamma(group.m(), d, cap);
  std::map<ExponentVector, bool> seen;
  std::size_t total = 0;
  for (const ExponentVector& alpha : gamma) {
    if (seen.contains(alpha)) continue;
    const std::vector<ExponentVector> block = orbit(group, alpha);
    std::map<ExponentVector, std::size_t> column;
    for (const ExponentVector& beta : block) {
      column.emplace(beta, column.size());
      seen.emplace(beta, true);
    }
    std::vector<std::vector<BigInt>> rows;
    for (const ExponentVector& beta : block) {
      std::vector<BigInt> row(block.size(), 0);
      for (const auto& [gamma_beta, c] : detail::raw_symmetrize(group, chi, beta)) row[column.at(gamma_beta)] = c;
      rows.push_back(std::move(row));
    }
    total += exact_rank(std::move(rows));
  }
  return total;
}

/// dim H_d(G, chi) = (chi(1)/|G|) sum_sigma chi(sigma) Q_d(sigma).
inline BigInt dimension_by_character_sum(const PermutationGroup& group, const CharacterSpec& chi, int d) {
  detail::require_matching(group, chi);
  if (d < 0) throw InputError("d must be non-negative");
  std::map<Partition, BigInt> q_cache;
  BigInt sum = 0;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (chi[i] == 0) continue;
    const Partition type = group.elements()[i].cycle_type();
    auto it = q_cache.find(type);
    if (it == q_cache.end()) it = q_cache.emplace(type, q_d(CoinSystem::from_cycle_type(type), d)).first;
    sum += chi[i] * it->second;
  }
  const BigInt dim = to_integer(Rational(chi.degree() * sum) / Rational(group.order()), "character-sum dimension");
  if (dim < 0) throw ConsistencyError("character-sum dimension is negative");
  return dim;
}

}  // namespace relsym
