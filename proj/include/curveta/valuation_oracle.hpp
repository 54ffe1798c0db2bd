#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "curveta/cluster.hpp"
#include "curveta/divisor.hpp"
#include "curveta/polynomial.hpp"

namespace curveta {

inline constexpr PointId kNoCurve = std::numeric_limits<PointId>::max();

/// How the local frame (a, b) centred at a point q arises from the frame of
/// its parent p. Chart A: a = a', b = a'(b' + shift); chart B: a = a'b', b = b'.
struct ChartStep {
  PointId parent = 0;
  bool chart_b = false;
  mpq_class shift = 0;
};

/// Explicit placement of every cluster point in affine charts, with default
/// coordinates filled in for free points that have none.
class ChartLayout {
 public:
  explicit ChartLayout(ClusterPtr cluster);

  const Cluster& cluster() const { return *cluster_; }
  const ClusterPtr& cluster_ptr() const { return cluster_; }
  const ChartStep& step(PointId q) const { return steps_[q]; }
  /// Exceptional curves {a = 0} and {b = 0} through q, or kNoCurve.
  PointId axis_a(PointId q) const { return axis_a_[q]; }
  PointId axis_b(PointId q) const { return axis_b_[q]; }
  /// Coordinates of all free points, explicit or defaulted.
  const std::map<PointId, mpq_class>& coords() const { return coords_; }

  /// Shift in q's frame of the free point on E_q with coordinate u.
  mpq_class direction(PointId q, const mpq_class& u) const;
  /// The choice-th smallest nonnegative integer coordinate on E_q not taken
  /// by a cluster point.
  mpq_class unused_coordinate(PointId q, std::size_t choice) const;

 private:
  ClusterPtr cluster_;
  std::vector<ChartStep> steps_;
  std::vector<PointId> axis_a_, axis_b_;
  std::map<PointId, mpq_class> coords_;
};

inline constexpr std::size_t kOracleTermLimit = 10'000;

namespace oracle {

/// Strict transform of f (with multiplicity e at the centre) in the chart of step.
Poly strict_transform(const Poly& f, const ChartStep& step, std::int64_t e);

/// e_p(f) at every cluster point.
IntVec multiplicities(const Poly& f, const ChartLayout& layout);
/// v_p(f) from the multiplicities.
IntVec values(const Poly& f, const ChartLayout& layout);
/// f in H_D, tested on values.
bool member_poly(const Poly& f, const Divisor& d, const ChartLayout& layout);
/// Local intersection multiplicity at the origin via repeated blow-ups.
std::int64_t intersection_mult(const Poly& f, const Poly& g);

/// Pushes a polynomial written in q's frame down to (x, y), removing
/// exceptional factors.
Poly push_down(const Poly& local, const ChartLayout& layout, PointId q);
/// An irreducible curvette through q: a line transverse to E_q at a point
/// outside the cluster, pushed down. At the origin choice 0 gives x.
Poly curvette(const ChartLayout& layout, PointId q, std::size_t choice = 0);

}  // namespace oracle

}  // namespace curveta
