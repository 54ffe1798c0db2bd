#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "curveta/cluster.hpp"

namespace testsupport {

using curveta::PointId;

/// Random valid proximity lists with n points, grown by blowing up either a
/// random free point on an existing curve or a random intersection of two
/// exceptional curves.
inline std::vector<std::vector<PointId>> random_proximities(std::mt19937& rng, std::size_t n,
                                                            double satellite_bias = 0.5) {
  std::vector<std::vector<PointId>> prox{{}};
  std::set<std::pair<PointId, PointId>> meets;
  std::bernoulli_distribution satellite(satellite_bias);
  for (PointId q = 1; q < n; ++q) {
    if (!meets.empty() && satellite(rng)) {
      auto it = meets.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, meets.size() - 1)(rng));
      auto [a, b] = *it;
      meets.erase(it);
      meets.insert({a, q});
      meets.insert({b, q});
      prox.push_back({a, b});
    } else {
      PointId p = std::uniform_int_distribution<PointId>(0, q - 1)(rng);
      meets.insert({p, q});
      prox.push_back({p});
    }
  }
  return prox;
}

inline curveta::ClusterPtr random_cluster(std::mt19937& rng, std::size_t n, double satellite_bias = 0.5) {
  return curveta::make_cluster(random_proximities(rng, n, satellite_bias));
}

inline curveta::ClusterPtr random_cluster_upto(std::mt19937& rng, std::size_t max_points,
                                               double satellite_bias = 0.5) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
  return random_cluster(rng, n, satellite_bias);
}

/// Distinct random coordinates (small integers and halves) for every free point.
inline std::map<PointId, mpq_class> random_coords(std::mt19937& rng, const curveta::Cluster& c) {
  std::map<PointId, mpq_class> coords;
  std::map<PointId, std::set<mpq_class>> used;
  std::uniform_int_distribution<int> num(-4, 8);
  for (PointId q = 1; q < c.size(); ++q) {
    if (c.classify(q) != curveta::PointKind::Free) continue;
    const PointId p = c.parent(q);
    for (;;) {
      mpq_class u(num(rng), 2);
      u.canonicalize();
      if (c.classify(p) == curveta::PointKind::Satellite && u == -1) continue;
      if (used[p].insert(u).second) {
        coords.emplace(q, u);
        break;
      }
    }
  }
  return coords;
}

}  // namespace testsupport
