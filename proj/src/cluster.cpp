#include "curveta/cluster.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "curveta/error.hpp"

namespace curveta {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

namespace {

using Edge = std::pair<PointId, PointId>;

Edge edge(PointId a, PointId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string point_context(PointId q, const std::vector<PointId>& prox) {
  std::ostringstream os;
  os << "point " << q << " proximate to {";
  for (std::size_t i = 0; i < prox.size(); ++i) os << (i ? "," : "") << prox[i];
  os << "}";
  return os.str();
}

}  // namespace

Cluster Cluster::validate(std::vector<std::vector<PointId>> proximities,
                          std::map<PointId, mpq_class> coords) {
  if (proximities.empty())
    throw Error(ErrorCode::LengthMismatch, "cluster needs at least the origin");

  const std::size_t n = proximities.size();
  std::set<Edge> meets;  // pairs of exceptional curves meeting at the current stage

  for (PointId q = 0; q < n; ++q) {
    auto& prox = proximities[q];
    std::sort(prox.begin(), prox.end());
    for (PointId p : prox)
      if (p >= q) throw Error(ErrorCode::ProximityToLaterPoint, point_context(q, prox));
    if (q == 0) continue;
    if (prox.empty() || prox.size() > 2)
      throw Error(ErrorCode::PointProximateToZeroOrThreePlus, point_context(q, prox));
    if (prox.size() == 1) {
      meets.insert(edge(prox[0], q));
      continue;
    }
    const Edge shared = edge(prox[0], prox[1]);
    if (prox[0] == prox[1] || !meets.contains(shared))
      throw Error(ErrorCode::GeometricallyInfeasibleSatellite,
                  point_context(q, prox) + ": the two curves do not meet at this stage");
    meets.erase(shared);
    meets.insert(edge(prox[0], q));
    meets.insert(edge(prox[1], q));
  }

  // The incremental graph is connected by construction; confirm it.
  std::vector<std::vector<PointId>> adj(n);
  for (auto [a, b] : meets) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<PointId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    PointId p = stack.back();
    stack.pop_back();
    for (PointId q : adj[p])
      if (!seen[q]) {
        seen[q] = true;
        ++reached;
        stack.push_back(q);
      }
  }
  if (reached != n)
    throw Error(ErrorCode::DisconnectedCluster, "exceptional locus is not connected");

  Cluster c;
  c.proximate_to_ = std::move(proximities);
  c.proximate_points_.assign(n, {});
  for (PointId q = 0; q < n; ++q)
    for (PointId p : c.proximate_to_[q]) c.proximate_points_[p].push_back(q);
  return c.with_coords(std::move(coords));
}

Cluster Cluster::with_coords(std::map<PointId, mpq_class> coords) const {
  for (auto& [p, value] : coords) {
    if (p >= size() || classify(p) != PointKind::Free) {
      std::ostringstream os;
      os << "coordinate given for point " << p << ", which is not a free point";
      throw Error(ErrorCode::InvalidCoordinate, os.str());
    }
    value.canonicalize();
  }
  Cluster c = *this;
  c.coords_ = std::move(coords);
  return c;
}

PointKind Cluster::classify(PointId p) const {
  if (p == 0) return PointKind::Origin;
  return proximate_to_[p].size() == 1 ? PointKind::Free : PointKind::Satellite;
}

bool Cluster::is_proximate(PointId q, PointId p) const {
  const auto& prox = proximate_to_[q];
  return std::find(prox.begin(), prox.end(), p) != prox.end();
}

bool Cluster::precedes(PointId q, PointId p) const {
  while (p > q) p = parent(p);
  return p == q;
}

ClusterPtr make_cluster(std::vector<std::vector<PointId>> proximities,
                        std::map<PointId, mpq_class> coords) {
  return std::make_shared<const Cluster>(
      Cluster::validate(std::move(proximities), std::move(coords)));
}

bool DualGraph::adjacent(PointId p, PointId q) const {
  const auto& row = adjacency[p];
  return std::find(row.begin(), row.end(), q) != row.end();
}

IntMatrix proximity_matrix(const Cluster& cluster) {
  IntMatrix p = IntMatrix::identity(cluster.size());
  for (PointId q = 0; q < cluster.size(); ++q)
    for (PointId target : cluster.proximate_to(q)) p(q, target) = -1;
  return p;
}

IntMatrix intersection_matrix(const Cluster& cluster) {
  const IntMatrix p = proximity_matrix(cluster);
  return -(p.transpose() * p);
}

DualGraph dual_graph(const Cluster& cluster) {
  const std::size_t n = cluster.size();
  const IntMatrix nmat = intersection_matrix(cluster);
  DualGraph g;
  g.adjacency.assign(n, {});
  for (PointId p = 0; p < n; ++p)
    for (PointId q = 0; q < n; ++q)
      if (p != q && nmat(p, q) == 1) g.adjacency[p].push_back(q);

  // A vertex is a dead-end iff it is not an articulation point.
  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<bool> articulation(n, false);
  struct Frame {
    PointId v;
    PointId parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  depth[0] = 0;
  low[0] = 0;
  int root_children = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < g.adjacency[f.v].size()) {
      PointId w = g.adjacency[f.v][f.next++];
      if (depth[w] < 0) {
        depth[w] = low[w] = depth[f.v] + 1;
        if (f.v == 0) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (!(w == f.parent && f.v != 0)) {
        low[f.v] = std::min(low[f.v], depth[w]);
      }
    } else {
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        PointId u = stack.back().v;
        low[u] = std::min(low[u], low[done.v]);
        if (u != 0 && low[done.v] >= depth[u]) articulation[u] = true;
      }
    }
  }
  articulation[0] = root_children > 1;
  for (PointId p = 0; p < n; ++p)
    if (!articulation[p]) g.dead_ends.push_back(p);
  return g;
}

IntMatrix unitriangular_inverse(const IntMatrix& lower) {
  const std::size_t n = lower.size();
  IntMatrix inv(n);
  // Forward substitution column by column: L * X = I.
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t acc = (i == col) ? 1 : 0;
      for (std::size_t k = 0; k < i; ++k) acc -= lower(i, k) * inv(k, col);
      inv(i, col) = acc;  // diagonal is 1
    }
  }
  return inv;
}

}  // namespace curveta
