#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "curveta/cluster.hpp"

namespace curveta {

using IntVec = std::vector<std::int64_t>;

/// Exceptional divisor of the cluster, held in three bases at once:
/// values v (strict transforms E_p), multiplicities e (total transforms),
/// excesses rho (branch divisors B_p). e = P v, rho = P^T e.
class Divisor {
 public:
  static Divisor from_values(ClusterPtr cluster, IntVec v);
  static Divisor from_mults(ClusterPtr cluster, IntVec e);
  static Divisor from_excesses(ClusterPtr cluster, IntVec rho);

  const Cluster& cluster() const { return *cluster_; }
  const ClusterPtr& cluster_ptr() const { return cluster_; }
  std::size_t size() const { return v_.size(); }

  const IntVec& values() const { return v_; }
  const IntVec& mults() const { return e_; }
  const IntVec& excesses() const { return rho_; }
  std::int64_t value(PointId p) const { return v_[p]; }
  std::int64_t mult(PointId p) const { return e_[p]; }
  std::int64_t excess(PointId p) const { return rho_[p]; }

  bool is_antinef() const;
  bool is_zero() const;

  Divisor operator+(const Divisor& other) const;
  Divisor operator*(std::int64_t k) const;
  /// Equal clusters (by value) and equal values.
  bool operator==(const Divisor& other) const;

 private:
  Divisor(ClusterPtr cluster, IntVec v, IntVec e, IntVec rho)
      : cluster_(std::move(cluster)), v_(std::move(v)), e_(std::move(e)), rho_(std::move(rho)) {}

  ClusterPtr cluster_;
  IntVec v_, e_, rho_;
};

IntVec values_to_mults(const Cluster& cluster, const IntVec& v);
IntVec mults_to_values(const Cluster& cluster, const IntVec& e);
IntVec mults_to_excesses(const Cluster& cluster, const IntVec& e);
IntVec excesses_to_mults(const Cluster& cluster, const IntVec& rho);

Divisor zero_divisor(ClusterPtr cluster);
/// E_p, the strict transform of the exceptional curve of p.
Divisor exceptional_curve(ClusterPtr cluster, PointId p);
/// Ebar_p, the total transform.
Divisor total_transform(ClusterPtr cluster, PointId p);
/// B_p, dual to -E_p.
Divisor branch_divisor(ClusterPtr cluster, PointId p);

inline constexpr std::size_t kDefaultUnloadBudget = 1'000'000;

/// Antinef closure: every round adds ceil(rho_p / E_p^2) copies of E_p
/// to each p with rho_p < 0, all at once.
Divisor unload(const Divisor& d, std::size_t max_rounds = kDefaultUnloadBudget);

std::int64_t intersect(const Divisor& d, const Divisor& c);
std::int64_t support_total_size(const Divisor& d);
std::int64_t codimension(const Divisor& d);

}  // namespace curveta
