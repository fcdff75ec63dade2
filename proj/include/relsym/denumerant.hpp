#pragma once

// The money-change denumerant Q_d and its description as a permutation
// character of S_m.
//
// Two routes to Q_d live here and share no code: the coin DP (q_d,
// q_d_series) and the character-theoretic sums (theorem_a_class_function,
// theorem_b_decomposition), which only know about orbit representatives,
// Kostka numbers and irreducible characters.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relsym/arith.hpp"
#include "relsym/characters.hpp"
#include "relsym/partition.hpp"
#include "relsym/tableaux.hpp"

namespace relsym {

/// The coefficients a_1, ..., a_n of a_1 t_1 + ... + a_n t_n = d. Order is
/// irrelevant and repeats are allowed.
class CoinSystem {
public:
  explicit CoinSystem(std::vector<int> coins) : coins_(std::move(coins)) {
    if (coins_.empty()) throw InputError("a coin system needs at least one coin");
    for (int c : coins_) {
      if (c < 1) throw InputError("coins must be positive, got " + std::to_string(c));
    }
  }

  CoinSystem(std::initializer_list<int> coins) : CoinSystem(std::vector<int>(coins)) {}

  /// The cycle lengths of a permutation of cycle type lambda.
  static CoinSystem from_cycle_type(const Partition& lambda) { return CoinSystem(lambda.parts()); }

  const std::vector<int>& coins() const { return coins_; }
  std::size_t n() const { return coins_.size(); }

  /// m = a_1 + ... + a_n.
  int total() const {
    int s = 0;
    for (int c : coins_) s += c;
    return s;
  }

private:
  std::vector<int> coins_;
};

/// Number of non-negative solutions of sum a_i t_i = d (one-dimensional coin DP).
inline BigInt q_d(const CoinSystem& coins, int d) {
  if (d < 0) throw InputError("amount must be non-negative");
  const auto n = static_cast<std::size_t>(d);
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (int a : coins.coins()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t s = step; s <= n; ++s) ways[s] += ways[s - step];
  }
  return ways[n];
}

/// Q_0, ..., Q_{d_max}: the truncated expansion of prod_i 1/(1 - t^{a_i}),
/// multiplying in one geometric series 1 + t^a + t^{2a} + ... at a time.
inline std::vector<BigInt> q_d_series(const CoinSystem& coins, int d_max) {
  if (d_max < 0) throw InputError("series length must be non-negative");
  const auto n = static_cast<std::size_t>(d_max) + 1;
  std::vector<BigInt> series(n, 0);
  series[0] = 1;
  for (int a : coins.coins()) {
    const auto step = static_cast<std::size_t>(a);
    std::vector<BigInt> product(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (series[i] == 0) continue;
      for (std::size_t j = i; j < n; j += step) product[j] += series[i];
    }
    series = std::move(product);
  }
  return series;
}

/// sigma -> Q_d(cycle type of sigma) as a class function of S_m.
inline ClassFunction q_d_class_function(int m, int d) {
  if (d < 0) throw InputError("d must be non-negative");
  return ClassFunction::from(m, [&](const Partition& lambda) { return q_d(CoinSystem::from_cycle_type(lambda), d); });
}

/// Images of the standard permutation of cycle type lambda: consecutive
/// blocks 1..a_1, a_1+1..a_1+a_2, ... each cycled forward (0-based).
inline std::vector<int> cycle_type_representative(const Partition& lambda) {
  std::vector<int> image(static_cast<std::size_t>(lambda.weight()));
  int start = 0;
  for (int len : lambda) {
    for (int k = 0; k < len; ++k) image[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    start += len;
  }
  return image;
}

/// Number of alpha in `gamma` with alpha_{sigma(i)} = alpha_i for all i.
inline BigInt count_fixed_exponent_vectors(std::span<const ExponentVector> gamma, std::span<const int> sigma) {
  BigInt fixed = 0;
  for (const ExponentVector& alpha : gamma) {
    bool ok = true;
    for (std::size_t i = 0; i < sigma.size() && ok; ++i) {
      ok = alpha[static_cast<std::size_t>(sigma[i])] == alpha[i];
    }
    if (ok) ++fixed;
  }
  return fixed;
}

/// Checks, class by class, that the trace of sigma on the permutation module
/// over Γ⁺_{m,d} (its number of fixed points) equals Q_d(sigma).
inline bool verify_trace_identity(int m, int d, std::size_t cap = kDefaultGammaCap) {
  if (m < 1) throw InputError("m must be at least 1");
  if (d < 0) throw InputError("d must be non-negative");
  if (gamma_size(m, d) > cap) {
    throw ResourceError("trace check needs " + gamma_size(m, d).str() + " exponent vectors (cap " +
                        std::to_string(cap) + ")");
  }
  const std::vector<ExponentVector> gamma = enumerate_gamma(m, d, cap);
  for (const Partition& lambda : enumerate_partitions(m)) {
    const std::vector<int> sigma = cycle_type_representative(lambda);
    if (count_fixed_exponent_vectors(gamma, sigma) != q_d(CoinSystem::from_cycle_type(lambda), d)) return false;
  }
  return true;
}

/// How the induced-character and Kostka sums run over Γ⁺_{m,d}.
enum class SumMode {
  /// one term per orbit representative; each orbit contributes |G| / |G| = 1
  orbit_collapsed,
  /// every alpha in Γ⁺_{m,d} with weight |G_alpha| / |G|; small sizes only
  literal,
};

namespace detail {

/// Multiplicity partitions of the summation index set, with their weights:
/// orbit counts (collapsed) or sum of |S_M(alpha)| / m! (literal).
inline std::map<Partition, Rational> summation_terms(int m, int d, SumMode mode, std::size_t cap) {
  if (m < 1) throw InputError("m must be at least 1");
  if (d < 0) throw InputError("d must be non-negative");
  std::map<Partition, Rational> terms;
  if (mode == SumMode::orbit_collapsed) {
    for (const ExponentVector& nu : orbit_representatives(m, d)) terms[multiplicity_partition(nu)] += 1;
  } else {
    const Rational group_order(factorial(static_cast<unsigned>(m)));
    for (const ExponentVector& alpha : enumerate_gamma(m, d, cap)) {
      const Partition mult = multiplicity_partition(alpha);
      terms[mult] += Rational(multiplicity_factorial(mult)) / group_order;
    }
  }
  return terms;
}

}  // namespace detail

/// Q_d as the sum of permutation characters (1/|G|) sum_alpha |G_alpha| (1_{G_alpha})^G
/// with G = S_m, where (1_{G_alpha})^G = (1_{S_M(alpha)})^{S_m}.
inline ClassFunction theorem_a_class_function(int m, int d, SumMode mode = SumMode::orbit_collapsed,
                                              std::size_t cap = kDefaultGammaCap) {
  ClassFunction out(m);
  for (const auto& [mult, weight] : detail::summation_terms(m, d, mode, cap)) {
    out += weight * induced_trivial_character(mult);
  }
  if (!out.is_integral()) throw ConsistencyError("induced-character sum produced a non-integral character value");
  return out;
}

/// Multiplicity of every chi^pi (pi ⊢ m) in Q_d:
/// (1/m!) sum_alpha sum_{M(alpha) ⊴ pi} M(alpha)! K_{pi,M(alpha)}.
/// Partitions with multiplicity zero are present with value 0.
inline std::map<Partition, BigInt> theorem_b_decomposition(int m, int d, SumMode mode = SumMode::orbit_collapsed,
                                                          std::size_t cap = kDefaultGammaCap) {
  const auto terms = detail::summation_terms(m, d, mode, cap);
  std::map<Partition, BigInt> out;
  for (const Partition& pi : enumerate_partitions(m)) {
    Rational mult = 0;
    for (const auto& [mpart, weight] : terms) {
      if (dominates(pi, mpart)) mult += weight * Rational(kostka(pi, mpart));
    }
    BigInt value = to_integer(mult, "Kostka-expansion multiplicity");
    if (value < 0) throw ConsistencyError("negative multiplicity for chi" + pi.to_string());
    out.emplace(pi, std::move(value));
  }
  return out;
}

/// sum_pi mult(pi) chi^pi.
inline ClassFunction reconstruct_class_function(int m, const std::map<Partition, BigInt>& multiplicities) {
  ClassFunction out(m);
  for (const auto& [pi, mult] : multiplicities) {
    if (mult != 0) out += Rational(mult) * irreducible_character(pi);
  }
  return out;
}

}  // namespace relsym
