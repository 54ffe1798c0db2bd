#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

namespace curveta {

/// Position of an infinitely near point in blow-up order; 0 is the origin O.
using PointId = std::size_t;

enum class PointKind { Origin, Free, Satellite };

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix&) const = default;

  static IntMatrix identity(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// A validated cluster of infinitely near points encoding a composite of
/// point blow-ups. Immutable after construction.
///
/// Proximities are purely combinatorial. Optional chart coordinates of free
/// points are carried along for the valuation oracle only.
class Cluster {
 public:
  /// Validates raw proximity lists (entry q lists the earlier points q is
  /// proximate to) and the optional free-point coordinates.
  static Cluster validate(std::vector<std::vector<PointId>> proximities,
                          std::map<PointId, mpq_class> coords = {});

  std::size_t size() const { return proximate_to_.size(); }

  /// Points that q is proximate to, ascending.
  const std::vector<PointId>& proximate_to(PointId q) const { return proximate_to_[q]; }
  /// Points q with q -> p, ascending.
  const std::vector<PointId>& proximate_points(PointId p) const { return proximate_points_[p]; }

  PointKind classify(PointId p) const;
  bool is_proximate(PointId q, PointId p) const;

  /// The point in whose first neighbourhood q lies (the latest point q is
  /// proximate to). Undefined for the origin.
  PointId parent(PointId q) const { return proximate_to_[q].back(); }

  /// Partial order: precedes(q, p) iff q <= p, i.e. p is infinitely near q
  /// (or equal).
  bool precedes(PointId q, PointId p) const;

  /// E_p^2 = -(1 + #{q : q -> p}).
  std::int64_t self_intersection(PointId p) const {
    return -1 - static_cast<std::int64_t>(proximate_points_[p].size());
  }

  const std::map<PointId, mpq_class>& coords() const { return coords_; }
  Cluster with_coords(std::map<PointId, mpq_class> coords) const;

  bool operator==(const Cluster& other) const {
    return proximate_to_ == other.proximate_to_ && coords_ == other.coords_;
  }

 private:
  Cluster() = default;

  std::vector<std::vector<PointId>> proximate_to_;
  std::vector<std::vector<PointId>> proximate_points_;
  std::map<PointId, mpq_class> coords_;
};

using ClusterPtr = std::shared_ptr<const Cluster>;

ClusterPtr make_cluster(std::vector<std::vector<PointId>> proximities,
                        std::map<PointId, mpq_class> coords = {});

struct DualGraph {
  std::vector<std::vector<PointId>> adjacency;
  std::vector<PointId> dead_ends;

  bool adjacent(PointId p, PointId q) const;
};

/// P with P(q, p) = -1 iff q -> p and ones on the diagonal, so e = P v.
IntMatrix proximity_matrix(const Cluster& cluster);
/// N = -P^T P.
IntMatrix intersection_matrix(const Cluster& cluster);
DualGraph dual_graph(const Cluster& cluster);

/// Exact inverse of a unit lower-triangular integer matrix.
IntMatrix unitriangular_inverse(const IntMatrix& lower);

}  // namespace curveta
