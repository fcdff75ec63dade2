#pragma once

// Dimension of the space H_d(S_m, chi^pi) of relative symmetric polynomials,
// computed three independent ways, and the non-vanishing criterion.

#include <optional>
#include <string>
#include <utility>

#include "relsym/arith.hpp"
#include "relsym/characters.hpp"
#include "relsym/denumerant.hpp"
#include "relsym/partition.hpp"
#include "relsym/tableaux.hpp"

namespace relsym {

namespace detail {

inline void require_partition_of(const Partition& pi, int m) {
  if (m < 1) throw InputError("m must be at least 1");
  if (pi.weight() != m) {
    throw InputError(pi.to_string() + " is not a partition of " + std::to_string(m));
  }
}

inline void require_degree(int d) {
  if (d < 0) throw InputError("d must be non-negative");
}

}  // namespace detail

/// chi(1) * sum over orbit representatives nu of [chi, 1]_{S_M(nu)}.
/// Representatives whose stabilizer sees no trivial constituent add zero.
inline BigInt dim_via_orbit_sum(int m, int d, const Partition& pi) {
  detail::require_partition_of(pi, m);
  detail::require_degree(d);
  BigInt sum = 0;
  for (const ExponentVector& nu : orbit_representatives(m, d)) {
    sum += restricted_trivial_inner_product(pi, multiplicity_partition(nu));
  }
  return character_table(m)->degree(pi) * sum;
}

/// chi(1) * [chi, Q_d]_{S_m}.
inline BigInt dim_via_inner_product(int m, int d, const Partition& pi) {
  detail::require_partition_of(pi, m);
  detail::require_degree(d);
  const Rational ip = inner_product(irreducible_character(pi), q_d_class_function(m, d));
  const BigInt mult = to_integer(ip, "[chi, Q_d]");
  if (mult < 0) throw ConsistencyError("[chi, Q_d] is negative");
  return character_table(m)->degree(pi) * mult;
}

/// chi(1) times the multiplicity of chi^pi in Q_d from the Kostka expansion.
inline BigInt dim_via_theorem_b(int m, int d, const Partition& pi) {
  detail::require_partition_of(pi, m);
  detail::require_degree(d);
  return character_table(m)->degree(pi) * theorem_b_decomposition(m, d).at(pi);
}

struct Nonvanishing {
  bool nonzero = false;
  std::optional<ExponentVector> witness;
};

/// H_d(S_m, chi^pi) is nonzero iff some alpha has M(alpha) ⊴ pi. The witness
/// is the first such orbit representative in reverse lexicographic order.
inline Nonvanishing is_nonvanishing(int m, int d, const Partition& pi) {
  detail::require_partition_of(pi, m);
  detail::require_degree(d);
  for (ExponentVector& nu : orbit_representatives(m, d)) {
    if (dominates(pi, multiplicity_partition(nu))) return {true, std::move(nu)};
  }
  return {};
}

struct DimensionReport {
  int m = 0;
  int d = 0;
  Partition pi;
  BigInt dim_orbit_sum;
  BigInt dim_inner_product;
  BigInt dim_theorem_b;
  std::optional<ExponentVector> nonvanishing_witness;

  const BigInt& dimension() const { return dim_orbit_sum; }
};

/// Runs all three formulas and the criterion; throws ConsistencyError unless
/// they agree.
inline DimensionReport dimension_report(int m, int d, const Partition& pi) {
  DimensionReport r;
  r.m = m;
  r.d = d;
  r.pi = pi;
  r.dim_orbit_sum = dim_via_orbit_sum(m, d, pi);
  r.dim_inner_product = dim_via_inner_product(m, d, pi);
  r.dim_theorem_b = dim_via_theorem_b(m, d, pi);
  r.nonvanishing_witness = is_nonvanishing(m, d, pi).witness;
  if (r.dim_orbit_sum != r.dim_inner_product || r.dim_orbit_sum != r.dim_theorem_b) {
    throw ConsistencyError("dimension formulas disagree for m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                           ", pi=" + pi.to_string() + ": " + r.dim_orbit_sum.str() + " / " +
                           r.dim_inner_product.str() + " / " + r.dim_theorem_b.str());
  }
  if (r.nonvanishing_witness.has_value() != (r.dim_orbit_sum > 0)) {
    throw ConsistencyError("non-vanishing criterion disagrees with the dimension for pi=" + pi.to_string());
  }
  return r;
}

}  // namespace relsym
