#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code path they are used to check.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "relsym/relsym.hpp"

namespace relsym::oracle {

/// Counts solutions of sum a_i t_i = d by nested loops over t_1, ..., t_n.
inline BigInt count_solutions(const std::vector<int>& coins, int d) {
  BigInt count = 0;
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i == coins.size()) {
      if (left == 0) ++count;
      return;
    }
    for (int t = 0; t * coins[i] <= left; ++t) self(self, i + 1, left - t * coins[i]);
  };
  rec(rec, 0, d);
  return count;
}

/// Every permutation of {0..m-1} as an image vector.
inline std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> cycle_lengths(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

/// Number of ways to drop the (distinguishable) cycles of lambda into
/// boxes so that box j receives total size sizes[j]; this is the value of
/// the permutation character on cosets of the Young subgroup S_sizes.
inline BigInt cycle_distributions(const std::vector<int>& lambda, std::vector<int> sizes) {
  for (int s : sizes) {
    if (s < 0) return 0;
  }
  BigInt count = 0;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == lambda.size()) {
      if (std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; })) ++count;
      return;
    }
    for (int& s : sizes) {
      if (s >= lambda[i]) {
        s -= lambda[i];
        self(self, i + 1);
        s += lambda[i];
      }
    }
  };
  rec(rec, 0);
  return count;
}

/// chi^pi(lambda) through the Jacobi–Trudi determinant
/// s_pi = det(h_{pi_i - i + j}), expanded over all permutations w of the rows.
inline BigInt jacobi_trudi_character(const Partition& pi, const Partition& lambda) {
  const int len = pi.length();
  std::vector<int> w(static_cast<std::size_t>(len));
  std::iota(w.begin(), w.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) inversions += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)];
    }
    std::vector<int> sizes(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) sizes[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(i)] - i + w[static_cast<std::size_t>(i)];
    const BigInt term = cycle_distributions(lambda.parts(), sizes);
    total += inversions % 2 ? BigInt(-term) : term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

/// (1_{S_mu})^{S_m}(sigma) by counting the words of content mu (cosets of
/// S_mu) that sigma leaves fixed: w(sigma(i)) = w(i) for all i.
inline BigInt coset_fixed_points(const Partition& mu, const std::vector<int>& sigma) {
  std::vector<int> word;
  for (int block = 0; block < mu.length(); ++block) word.insert(word.end(), static_cast<std::size_t>(mu[static_cast<std::size_t>(block)]), block);
  BigInt fixed = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < sigma.size() && ok; ++i) ok = word[static_cast<std::size_t>(sigma[i])] == word[i];
    if (ok) ++fixed;
  } while (std::next_permutation(word.begin(), word.end()));
  return fixed;
}

/// Semistandard tableaux of shape mu and content pi, filled cell by cell in
/// reading order with every value tried in every cell.
inline BigInt count_ssyt_cellwise(const Partition& mu, const std::vector<int>& content) {
  const std::size_t rows = static_cast<std::size_t>(mu.length());
  std::vector<std::vector<int>> t(rows);
  for (std::size_t i = 0; i < rows; ++i) t[i].assign(static_cast<std::size_t>(mu[i]), 0);
  std::vector<int> left(content);
  BigInt count = 0;
  auto rec = [&](auto& self, std::size_t r, std::size_t c) -> void {
    if (r == rows) {
      ++count;
      return;
    }
    if (c == t[r].size()) {
      self(self, r + 1, 0);
      return;
    }
    for (std::size_t v = 0; v < left.size(); ++v) {
      if (left[v] == 0) continue;
      const int value = static_cast<int>(v) + 1;
      if (c > 0 && t[r][c - 1] > value) continue;
      if (r > 0 && t[r - 1][c] >= value) continue;
      --left[v];
      t[r][c] = value;
      self(self, r, c + 1);
      ++left[v];
    }
  };
  rec(rec, 0, 0);
  return count;
}

/// Dominance exactly as first stated: prefix sums compared only up to the
/// shorter length.
inline bool dominates_short_prefix(const Partition& mu, const Partition& pi) {
  const int n = std::min(mu.length(), pi.length());
  int a = 0;
  int b = 0;
  for (int i = 0; i < n; ++i) {
    a += mu[static_cast<std::size_t>(i)];
    b += pi[static_cast<std::size_t>(i)];
    if (b > a) return false;
  }
  return true;
}

/// All subgroups of S_m (small m), each listed once, found as closures of
/// pairs of elements. Every subgroup of S_4 is 2-generated.
inline std::vector<PermutationGroup> all_two_generated_subgroups(int m) {
  const PermutationGroup sm = symmetric_group(m);
  std::set<std::vector<Permutation>> seen;
  std::vector<PermutationGroup> out;
  for (const Permutation& a : sm.elements()) {
    for (const Permutation& b : sm.elements()) {
      PermutationGroup g = enumerate_group({a, b}, m);
      std::vector<Permutation> key = g.elements();
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(std::move(g));
    }
  }
  return out;
}

/// Products in the rational group algebra of a concrete group.
class GroupAlgebra {
public:
  using Element = std::vector<Rational>;  // coefficient per group element

  explicit GroupAlgebra(const PermutationGroup& g) : g_(g) {
    const std::size_t n = g.order();
    table_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table_[i][j] = *g.index_of(g.elements()[i] * g.elements()[j]);
    }
  }

  Element multiply(const Element& x, const Element& y) const {
    Element z(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] != 0) z[table_[i][j]] += x[i] * y[j];
      }
    }
    return z;
  }

private:
  const PermutationGroup& g_;
  std::vector<std::vector<std::size_t>> table_;
};

inline std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Gamma by an odometer over [0, d]^m, keeping the tuples that sum to d.
inline std::vector<std::vector<int>> brute_gamma(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(m), 0);
  while (true) {
    if (std::accumulate(t.begin(), t.end(), 0) == d) out.push_back(t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == d) t[i++] = 0;
    if (i == t.size()) break;
    ++t[i];
  }
  return out;
}

/// Multiplicity of chi^pi in the permutation character of S_m on Gamma, as
/// (1/m!) sum over all permutations of fix(sigma) chi^pi(sigma).
inline Rational brute_multiplicity(int m, int d, const Partition& pi) {
  const auto gamma = brute_gamma(m, d);
  const auto perms = all_permutations(m);
  BigInt sum = 0;
  for (const auto& s : perms) {
    BigInt fixed = 0;
    for (const auto& a : gamma) {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[static_cast<std::size_t>(s[i])] == a[i];
      if (ok) ++fixed;
    }
    sum += fixed * jacobi_trudi_character(pi, Partition(cycle_lengths(s)));
  }
  return Rational(sum, BigInt(perms.size()));
}

/// Rank of the images of every monomial under T(S_m, chi^pi), with T
/// written out as a sum over all permutations.
inline std::size_t brute_symmetrizer_rank(int m, int d, const Partition& pi) {
  const auto gamma = brute_gamma(m, d);
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t i = 0; i < gamma.size(); ++i) column[gamma[i]] = i;
  const auto perms = all_permutations(m);
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : gamma) {
    std::vector<Rational> row(gamma.size(), Rational(0));
    for (const auto& s : perms) {
      std::vector<int> image(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) image[i] = a[static_cast<std::size_t>(s[i])];
      row[column.at(image)] += Rational(jacobi_trudi_character(pi, Partition(cycle_lengths(s))));
    }
    rows.push_back(row);
  }
  return rational_rank(rows);
}

/// Every integer-valued irreducible character of g. Candidates are integer
/// class functions with chi(1)^2 <= |G| and norm 1; a candidate is kept when
/// e = (chi(1)/|G|) sum chi(s) s is an idempotent whose multiples by the
/// class sums span a single line, which singles out one primitive central
/// idempotent and hence one irreducible character.
inline std::vector<CharacterSpec> integer_irreducible_characters(const PermutationGroup& g) {
  const auto classes = g.conjugacy_classes();
  const std::size_t n = g.order();
  const GroupAlgebra algebra(g);
  std::vector<GroupAlgebra::Element> class_sums;
  for (const auto& cls : classes) {
    GroupAlgebra::Element k(n, Rational(0));
    for (std::size_t e : cls) k[e] = 1;
    class_sums.push_back(std::move(k));
  }

  std::vector<CharacterSpec> out;
  std::vector<int> per_class(classes.size());
  for (int degree = 1; degree * degree <= static_cast<int>(n); ++degree) {
    if (n % static_cast<std::size_t>(degree) != 0) continue;
    per_class[0] = degree;
    auto rec = [&](auto& self, std::size_t k) -> void {
      if (k == classes.size()) {
        std::vector<BigInt> values(n);
        for (std::size_t c = 0; c < classes.size(); ++c) {
          for (std::size_t e : classes[c]) values[e] = per_class[c];
        }
        if (!CharacterSpec::has_unit_norm(g, values)) return;
        GroupAlgebra::Element e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = Rational(degree) * Rational(values[i]) / Rational(n);
        if (algebra.multiply(e, e) != e) return;
        std::vector<std::vector<Rational>> span;
        for (const auto& k_sum : class_sums) span.push_back(algebra.multiply(k_sum, e));
        if (rational_rank(span) != 1) return;
        out.push_back(CharacterSpec::from_function(g, [&](const Permutation& s) { return values[*g.index_of(s)]; }));
        return;
      }
      for (int v = -degree; v <= degree; ++v) {
        per_class[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 1);
  }
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 engine(20261015u);
  return engine;
}

}  // namespace relsym::oracle
