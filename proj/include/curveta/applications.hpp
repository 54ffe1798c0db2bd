#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "curveta/divisor.hpp"
#include "curveta/generators.hpp"
#include "curveta/kernels.hpp"
#include "curveta/maximal_contact.hpp"
#include "curveta/monomial_ideal.hpp"

namespace curveta {

/// Integral closure of the ideal with log-resolution divisor F: H_F.
MonomialIdeal integral_closure(const Divisor& f, const MaximalContactSet& contacts);

/// K_pi: multiplicity one at every point.
Divisor relative_canonical(ClusterPtr cluster);

/// unload(max(0, floor(lambda v(F)) - v(K_pi))), the divisor of J(a^lambda).
Divisor multiplier_divisor(const Divisor& f, const mpq_class& lambda);

struct MultiplierIdeal {
  Divisor divisor;
  MonomialIdeal ideal;
};

MultiplierIdeal multiplier_ideal(const Divisor& f, const mpq_class& lambda, const MaximalContactSet& contacts);

/// Sorted distinct (k_p + 1 + j) / v_p(F) in (0, lambda_max).
std::vector<mpq_class> jump_candidates(const Divisor& f, const mpq_class& lambda_max);

struct JumpEntry {
  mpq_class lambda;
  Divisor divisor;
  MonomialIdeal ideal;
};

struct JumpingTable {
  std::vector<JumpEntry> entries;
};

/// Jumping numbers in (0, lambda_max) with their multiplier ideals.
JumpingTable jumping_numbers(const Divisor& f, const mpq_class& lambda_max, const MaximalContactSet& contacts,
                             kernels::Exec exec = kernels::default_exec());

/// unload(i E_q), the divisor of {v_q >= i}.
Divisor filtration_divisor(ClusterPtr cluster, PointId q, std::int64_t i);

struct FiltrationRow {
  std::int64_t index;
  Divisor divisor;
  MonomialIdeal ideal;
};

/// V_1, ..., V_{i_max} for the divisorial valuation of q; i_max <= B_q^2.
std::vector<FiltrationRow> valuation_filtration(ClusterPtr cluster, PointId q, std::int64_t i_max,
                                                const MaximalContactSet& contacts);

}  // namespace curveta
