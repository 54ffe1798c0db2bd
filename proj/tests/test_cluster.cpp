#include <doctest.h>

#include <random>

#include "curveta/cluster.hpp"
#include "curveta/error.hpp"
#include "support/fixtures.hpp"
#include "support/random_cluster.hpp"

using namespace curveta;

namespace {

ErrorCode code_of(std::vector<std::vector<PointId>> prox) {
  try {
    make_cluster(std::move(prox));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return ErrorCode::ParseError;
}

/// Leading principal minors by exact fraction-free elimination (Bareiss).
std::vector<mpz_class> leading_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  std::vector<mpz_class> minors;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}

}  // namespace

TEST_CASE("two-pair branch cluster validates with the expected classification") {
  auto c = testsupport::two_pair_cluster();
  CHECK(c->size() == 5);
  CHECK(c->classify(0) == PointKind::Origin);
  CHECK(c->classify(1) == PointKind::Free);
  CHECK(c->classify(2) == PointKind::Satellite);
  CHECK(c->classify(3) == PointKind::Free);
  CHECK(c->classify(4) == PointKind::Satellite);
  CHECK(c->proximate_points(0) == std::vector<PointId>{1, 2});
  CHECK(c->parent(4) == 3);
}

TEST_CASE("single point cluster") {
  auto c = make_cluster({{}});
  CHECK(c->size() == 1);
  CHECK(proximity_matrix(*c) == IntMatrix::identity(1));
  CHECK(intersection_matrix(*c)(0, 0) == -1);
  CHECK(dual_graph(*c).dead_ends == std::vector<PointId>{0});
}

TEST_CASE("validation errors") {
  CHECK(code_of({{}, {0}, {0, 1}, {0, 1, 2}}) == ErrorCode::PointProximateToZeroOrThreePlus);
  CHECK(code_of({{}, {}}) == ErrorCode::PointProximateToZeroOrThreePlus);
  CHECK(code_of({{}, {1}}) == ErrorCode::ProximityToLaterPoint);
  CHECK(code_of({{0}}) == ErrorCode::ProximityToLaterPoint);
  CHECK(code_of({{}, {0}, {2}}) == ErrorCode::ProximityToLaterPoint);
  // E_O and E_1 stop meeting once p2 is blown up at their intersection.
  CHECK(code_of({{}, {0}, {0, 1}, {0, 1}}) == ErrorCode::GeometricallyInfeasibleSatellite);
  CHECK(code_of({{}, {0}, {0, 0}}) == ErrorCode::GeometricallyInfeasibleSatellite);
  CHECK(code_of({{}, {0}, {0}, {1, 2}}) == ErrorCode::GeometricallyInfeasibleSatellite);
  CHECK(code_of({}) == ErrorCode::LengthMismatch);
}

TEST_CASE("proximity and intersection matrices") {
  auto c = testsupport::two_pair_cluster();
  IntMatrix p = proximity_matrix(*c);
  CHECK(p(4, 2) == -1);
  CHECK(p(4, 3) == -1);
  CHECK(p(4, 0) == 0);
  CHECK(p(4, 4) == 1);
  CHECK(p * unitriangular_inverse(p) == IntMatrix::identity(5));
  IntMatrix n = intersection_matrix(*c);
  CHECK(n(0, 0) == -3);
  CHECK(n(2, 4) == 1);
  CHECK(n(2, 3) == 0);
  CHECK(n == -(p.transpose() * p));
}

TEST_CASE("dual graph and dead-ends") {
  auto c = testsupport::two_pair_cluster();
  DualGraph g = dual_graph(*c);
  CHECK(g.dead_ends == std::vector<PointId>{0, 1, 3});
  CHECK(g.adjacent(2, 4));
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 1));

  auto chain = make_cluster({{}, {0}, {1}, {2}});
  CHECK(dual_graph(*chain).dead_ends == std::vector<PointId>{0, 3});
}

TEST_CASE("infinitely-near order") {
  auto c = testsupport::two_pair_cluster();
  CHECK(c->precedes(0, 4));
  CHECK(c->precedes(2, 4));
  CHECK(c->precedes(3, 3));
  CHECK_FALSE(c->precedes(4, 2));
  auto branching = make_cluster({{}, {0}, {0}});
  CHECK_FALSE(branching->precedes(1, 2));
}

TEST_CASE("random clusters: matrix identities, definiteness, dead-ends, order") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    auto c = testsupport::random_cluster_upto(rng, 12);
    const IntMatrix p = proximity_matrix(*c);
    const IntMatrix n = intersection_matrix(*c);
    REQUIRE(n == -(p.transpose() * p));
    REQUIRE(n == n.transpose());
    auto minors = leading_minors(n);
    REQUIRE(minors.size() == c->size());
    for (std::size_t k = 0; k < minors.size(); ++k) CHECK(sgn(minors[k]) == (k % 2 == 0 ? -1 : 1));
    for (PointId q = 0; q < c->size(); ++q) CHECK(n(q, q) == c->self_intersection(q));

    DualGraph g = dual_graph(*c);
    for (PointId d : g.dead_ends) CHECK(c->classify(d) != PointKind::Satellite);
    // The dual graph of a cluster is a tree: dead-ends are its leaves.
    std::size_t edges = 0;
    for (const auto& row : g.adjacency) edges += row.size();
    CHECK(edges == 2 * (c->size() - 1));
    for (PointId v = 0; v < c->size(); ++v) {
      const bool leaf = g.adjacency[v].size() <= 1;
      CHECK(leaf == std::binary_search(g.dead_ends.begin(), g.dead_ends.end(), v));
    }

    for (PointId a = 0; a < c->size(); ++a)
      for (PointId b = 0; b < c->size(); ++b) {
        if (a != b && c->precedes(a, b)) CHECK_FALSE(c->precedes(b, a));
        for (PointId d = 0; d < c->size(); ++d)
          if (c->precedes(a, b) && c->precedes(b, d)) CHECK(c->precedes(a, d));
      }
  }
}
