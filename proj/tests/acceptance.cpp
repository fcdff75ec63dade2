// Acceptance suite: every criterion is an exact check (no tolerance) over the
// stated range. Prints one PASS/FAIL line per criterion and exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "relsym/relsym.hpp"

using namespace relsym;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostream&)> check;
};

// 1. DP denumerant, induced-character sum and Kostka expansion agree.
bool q_d_three_ways(std::ostream& log) {
  for (int m = 1; m <= 8; ++m) {
    const auto table = character_table(m);
    for (int d = 0; d <= 12; ++d) {
      const ClassFunction a = theorem_a_class_function(m, d);
      const auto mult = theorem_b_decomposition(m, d);
      for (const Partition& lambda : enumerate_partitions(m)) {
        const BigInt dp = q_d(CoinSystem::from_cycle_type(lambda), d);
        BigInt via_b = 0;
        for (const auto& [pi, k] : mult) via_b += k * table->value(pi, lambda);
        if (Rational(dp) != a(lambda) || dp != via_b) {
          log << "m=" << m << " d=" << d << " lambda=" << lambda.to_string() << ": dp=" << dp
              << " induced=" << a(lambda) << " kostka=" << via_b;
          return false;
        }
      }
    }
  }
  return true;
}

// 2. The three dimension formulas agree; the exact rank agrees for small sizes.
bool dimension_formulas(std::ostream& log) {
  for (int m = 1; m <= 7; ++m) {
    for (int d = 0; d <= 10; ++d) {
      for (const Partition& pi : enumerate_partitions(m)) {
        const BigInt a = dim_via_orbit_sum(m, d, pi);
        const BigInt b = dim_via_inner_product(m, d, pi);
        const BigInt c = dim_via_theorem_b(m, d, pi);
        if (a != b || a != c) {
          log << "m=" << m << " d=" << d << " pi=" << pi.to_string() << ": " << a << " / " << b << " / " << c;
          return false;
        }
      }
    }
  }
  for (int m = 1; m <= 5; ++m) {
    const PermutationGroup g = symmetric_group(m);
    for (const Partition& pi : enumerate_partitions(m)) {
      const CharacterSpec chi = CharacterSpec::restricted(g, pi, true);
      for (int d = 0; d <= 6; ++d) {
        const BigInt rank(dimension_by_rank(g, chi, d));
        if (rank != dim_via_orbit_sum(m, d, pi)) {
          log << "rank mismatch m=" << m << " d=" << d << " pi=" << pi.to_string();
          return false;
        }
      }
    }
  }
  return true;
}

// 3. Non-vanishing criterion matches positivity; sign-character threshold.
bool nonvanishing_criterion(std::ostream& log) {
  for (int m = 1; m <= 7; ++m) {
    for (int d = 0; d <= 10; ++d) {
      for (const Partition& pi : enumerate_partitions(m)) {
        const bool positive = dim_via_orbit_sum(m, d, pi) > 0;
        if (is_nonvanishing(m, d, pi).nonzero != positive) {
          log << "m=" << m << " d=" << d << " pi=" << pi.to_string();
          return false;
        }
      }
    }
    const int threshold = m * (m - 1) / 2;
    for (int d = 0; d <= threshold + 2; ++d) {
      if (is_nonvanishing(m, d, Partition::column(m)).nonzero != (d >= threshold)) {
        log << "sign threshold m=" << m << " d=" << d;
        return false;
      }
    }
  }
  return true;
}

// 4. Fixed points of each class representative on Γ⁺_{m,d} equal Q_d.
bool trace_identity(std::ostream& log) {
  for (int m = 1; m <= 6; ++m) {
    for (int d = 0; d <= 8; ++d) {
      if (!verify_trace_identity(m, d)) {
        log << "m=" << m << " d=" << d;
        return false;
      }
    }
  }
  return true;
}

// 5. Kostka by tableaux equals the Young-subgroup average; positivity iff dominance.
bool kostka_dual(std::ostream& log) {
  for (int m = 1; m <= 7; ++m) {
    for (const Partition& mu : enumerate_partitions(m)) {
      for (const Partition& pi : enumerate_partitions(m)) {
        const BigInt k = kostka(mu, pi);
        if (k != restricted_trivial_inner_product(mu, pi) || (k > 0) != dominates(mu, pi)) {
          log << "mu=" << mu.to_string() << " pi=" << pi.to_string();
          return false;
        }
      }
    }
  }
  return true;
}

// 6. Row orthogonality and the degree-square sum.
bool orthogonality(std::ostream& log) {
  for (int m = 1; m <= 8; ++m) {
    const auto t = character_table(m);
    const auto& parts = t->partitions();
    BigInt squares = 0;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      squares += t->degree(parts[a]) * t->degree(parts[a]);
      for (std::size_t b = 0; b < parts.size(); ++b) {
        BigInt sum = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) sum += class_size(parts[c]) * (*t)(a, c) * (*t)(b, c);
        if (sum != (a == b ? factorial(static_cast<unsigned>(m)) : BigInt(0))) {
          log << "m=" << m << " rows " << parts[a].to_string() << ", " << parts[b].to_string();
          return false;
        }
      }
    }
    if (squares != factorial(static_cast<unsigned>(m))) {
      log << "degree squares m=" << m;
      return false;
    }
  }
  return true;
}

// 7. Norm formula vs coefficient sum, and T^2 = T, on every subgroup of S_4.
bool symmetrizer_norms(std::ostream& log) {
  std::size_t pairs = 0;
  for (const PermutationGroup& g : oracle::all_two_generated_subgroups(4)) {
    for (const CharacterSpec& chi : oracle::integer_irreducible_characters(g)) {
      ++pairs;
      for (int d = 0; d <= 4; ++d) {
        for (const ExponentVector& alpha : enumerate_gamma(4, d)) {
          const SymmetrizedPolynomial once = symmetrize_monomial(g, chi, alpha);
          if (symmetrize(g, chi, once) != once) {
            log << "T^2 != T for alpha=" << alpha.to_string() << " |G|=" << g.order();
            return false;
          }
          try {
            (void)norm_squared(g, chi, alpha);
          } catch (const ConsistencyError& e) {
            log << e.what();
            return false;
          }
        }
      }
    }
  }
  log << pairs << " (group, character) pairs";
  return true;
}

// 8. Spot values.
bool spot_values(std::ostream& log) {
  const auto b = theorem_b_decomposition(3, 2);
  const bool decomposition = b.at({3}) == 2 && b.at({2, 1}) == 2 && b.at({1, 1, 1}) == 0;
  const bool dimension = dim_via_orbit_sum(3, 2, {2, 1}) == 4 && dim_via_inner_product(3, 2, {2, 1}) == 4 &&
                         dim_via_theorem_b(3, 2, {2, 1}) == 4;
  const bool denumerant = q_d({1, 2}, 4) == 3 && oracle::count_solutions({1, 2}, 4) == 3;
  const bool decomposition_oracle = oracle::brute_multiplicity(3, 2, {3}) == 2 &&
                                    oracle::brute_multiplicity(3, 2, {2, 1}) == 2 &&
                                    oracle::brute_multiplicity(3, 2, {1, 1, 1}) == 0;
  const bool dimension_oracle = oracle::brute_symmetrizer_rank(3, 2, {2, 1}) == 4;
  if (!decomposition_oracle) log << "decomposition oracle ";
  if (!dimension_oracle) log << "dimension oracle ";
  if (!decomposition) log << "decomposition ";
  if (!dimension) log << "dimension ";
  if (!denumerant) log << "denumerant ";
  return decomposition && dimension && denumerant && decomposition_oracle && dimension_oracle;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Q_d: DP == induced-character sum == Kostka expansion (m<=8, d<=12)", q_d_three_ways},
      {2, "dimension: orbit sum == inner product == Kostka (m<=7, d<=10); == rank (m<=5, d<=6)", dimension_formulas},
      {3, "non-vanishing criterion <=> dimension > 0; sign threshold m(m-1)/2 (m<=7)", nonvanishing_criterion},
      {4, "trace identity: fixed points on exponent vectors == Q_d (m<=6, d<=8)", trace_identity},
      {5, "Kostka by tableaux == Young-subgroup average; K > 0 <=> dominance (m<=7)", kostka_dual},
      {6, "character table row orthogonality and sum of squared degrees (m<=8)", orthogonality},
      {7, "symmetrizer norm formula == coefficient sum; T^2 == T (subgroups of S_4, d<=4)", symmetrizer_norms},
      {8, "spot values: decompose(3,2), dim(3,2,(2,1)), Q_4(1,2)", spot_values},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                log.str().empty() ? "" : " -- ", log.str().c_str());
    if (!ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
