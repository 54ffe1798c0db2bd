#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curveta/cluster.hpp"
#include "curveta/divisor.hpp"
#include "curveta/polynomial.hpp"
#include "curveta/valuation_oracle.hpp"

namespace curveta {

/// The totally ordered support of a branch divisor: multiplicities along the
/// chain and, per chain point, the chain positions it is proximate to.
struct BranchChain {
  IntVec mults;
  std::vector<std::vector<std::size_t>> proximities;

  bool operator==(const BranchChain&) const = default;
};

struct PuiseuxData {
  std::int64_t n = 1;
  IntVec char_exponents;
  /// n_0 = n, n_i = gcd(n, m_1, ..., m_i).
  IntVec gcd_chain;

  bool operator==(const PuiseuxData&) const = default;
};

struct SemigroupData {
  IntVec generators;
};

BranchChain branch_chain(const Cluster& cluster, PointId q);
IntVec multiplicity_sequence(const Cluster& cluster, PointId q);

/// Rebuilds the characteristic exponents by reading each characteristic pair
/// as a run of free points followed by a run of satellites.
PuiseuxData characteristic_data(const BranchChain& chain);
/// Builds the data from (n; m_1, ..., m_g), checking the exponents.
PuiseuxData make_puiseux(std::int64_t n, IntVec char_exponents);
/// The chain of a branch with these exponents, followed by `tail` free
/// points of multiplicity one.
BranchChain generate_chain(const PuiseuxData& data, std::size_t tail = 0);
SemigroupData semigroup_generators(const PuiseuxData& data);

struct ContactElement {
  /// Dead-end point, or size() + k for the k-th augmented transverse line.
  PointId index = 0;
  bool augmented = false;
  IntVec mults;
  IntVec values;
  PuiseuxData puiseux;
  SemigroupData semigroup;
  std::optional<Poly> poly;
};

/// One maximal contact element per dead-end, plus augmented smooth lines if
/// fewer than two transverse smooth ones exist.
struct MaximalContactSet {
  ClusterPtr cluster;
  std::vector<ContactElement> elements;
  /// Element positions of the two smooth transverse elements used at B_O.
  std::size_t transverse[2] = {0, 0};

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> position_of(PointId index) const;
  std::string name(std::size_t position) const;
  bool has_polynomials() const;
};

MaximalContactSet maximal_contact_set(ClusterPtr cluster);
/// Same, with explicit polynomials attached; `choice` selects among
/// admissible curvettes (0 is canonical).
MaximalContactSet maximal_contact_set(const ChartLayout& layout, std::size_t choice = 0);

/// Curvette at q as an explicit polynomial, checked against e(B_q) by the
/// oracle. Throws OracleMismatch if the check fails.
Poly canonical_polynomial(const ChartLayout& layout, PointId q, std::size_t choice = 0);

}  // namespace curveta
