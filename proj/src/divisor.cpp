#include "curveta/divisor.hpp"

#include <algorithm>
#include <sstream>

#include "curveta/error.hpp"

namespace curveta {

namespace {

void check_length(const Cluster& cluster, const IntVec& x) {
  if (x.size() != cluster.size()) {
    std::ostringstream os;
    os << "vector of length " << x.size() << " for a cluster of " << cluster.size() << " points";
    throw Error(ErrorCode::LengthMismatch, os.str());
  }
}

}  // namespace

IntVec values_to_mults(const Cluster& cluster, const IntVec& v) {
  IntVec e(v);
  for (PointId q = 0; q < v.size(); ++q)
    for (PointId p : cluster.proximate_to(q)) e[q] -= v[p];
  return e;
}

IntVec mults_to_values(const Cluster& cluster, const IntVec& e) {
  IntVec v(e);
  for (PointId q = 0; q < e.size(); ++q)
    for (PointId p : cluster.proximate_to(q)) v[q] += v[p];
  return v;
}

IntVec mults_to_excesses(const Cluster& cluster, const IntVec& e) {
  IntVec rho(e);
  for (PointId q = 0; q < e.size(); ++q)
    for (PointId p : cluster.proximate_to(q)) rho[p] -= e[q];
  return rho;
}

IntVec excesses_to_mults(const Cluster& cluster, const IntVec& rho) {
  IntVec e(rho);
  for (PointId p = e.size(); p-- > 0;)
    for (PointId q : cluster.proximate_points(p)) e[p] += e[q];
  return e;
}

Divisor Divisor::from_values(ClusterPtr cluster, IntVec v) {
  check_length(*cluster, v);
  IntVec e = values_to_mults(*cluster, v);
  IntVec rho = mults_to_excesses(*cluster, e);
  return Divisor(std::move(cluster), std::move(v), std::move(e), std::move(rho));
}

Divisor Divisor::from_mults(ClusterPtr cluster, IntVec e) {
  check_length(*cluster, e);
  IntVec v = mults_to_values(*cluster, e);
  IntVec rho = mults_to_excesses(*cluster, e);
  return Divisor(std::move(cluster), std::move(v), std::move(e), std::move(rho));
}

Divisor Divisor::from_excesses(ClusterPtr cluster, IntVec rho) {
  check_length(*cluster, rho);
  IntVec e = excesses_to_mults(*cluster, rho);
  IntVec v = mults_to_values(*cluster, e);
  return Divisor(std::move(cluster), std::move(v), std::move(e), std::move(rho));
}

bool Divisor::is_antinef() const {
  return std::all_of(rho_.begin(), rho_.end(), [](std::int64_t r) { return r >= 0; });
}

bool Divisor::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

Divisor Divisor::operator+(const Divisor& other) const {
  check_length(*cluster_, other.v_);
  IntVec v(v_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.v_[i];
  return from_values(cluster_, std::move(v));
}

Divisor Divisor::operator*(std::int64_t k) const {
  IntVec v(v_);
  for (auto& x : v) x *= k;
  return from_values(cluster_, std::move(v));
}

bool Divisor::operator==(const Divisor& other) const {
  if (v_ != other.v_) return false;
  return cluster_ == other.cluster_ || *cluster_ == *other.cluster_;
}

Divisor zero_divisor(ClusterPtr cluster) {
  const std::size_t n = cluster->size();
  return Divisor::from_values(std::move(cluster), IntVec(n, 0));
}

Divisor exceptional_curve(ClusterPtr cluster, PointId p) {
  IntVec v(cluster->size(), 0);
  v.at(p) = 1;
  return Divisor::from_values(std::move(cluster), std::move(v));
}

Divisor total_transform(ClusterPtr cluster, PointId p) {
  IntVec e(cluster->size(), 0);
  e.at(p) = 1;
  return Divisor::from_mults(std::move(cluster), std::move(e));
}

Divisor branch_divisor(ClusterPtr cluster, PointId p) {
  IntVec rho(cluster->size(), 0);
  rho.at(p) = 1;
  return Divisor::from_excesses(std::move(cluster), std::move(rho));
}

Divisor unload(const Divisor& d, std::size_t max_rounds) {
  const Cluster& cluster = d.cluster();
  IntVec v = d.values();
  IntVec rho = d.excesses();
  for (std::size_t round = 0;; ++round) {
    bool deficient = false;
    for (PointId p = 0; p < v.size(); ++p) {
      if (rho[p] >= 0) continue;
      deficient = true;
      // rho_p < 0 and E_p^2 < 0: ceil(rho_p / E_p^2) = ceil(|rho_p| / |E_p^2|).
      const std::int64_t need = -rho[p];
      const std::int64_t self = -cluster.self_intersection(p);
      v[p] += (need + self - 1) / self;
    }
    if (!deficient) break;
    if (round + 1 >= max_rounds) {
      std::ostringstream os;
      os << "unloading did not stabilise within " << max_rounds << " rounds";
      throw Error(ErrorCode::IterationBudgetExceeded, os.str());
    }
    rho = mults_to_excesses(cluster, values_to_mults(cluster, v));
  }
  return Divisor::from_values(d.cluster_ptr(), std::move(v));
}

std::int64_t intersect(const Divisor& d, const Divisor& c) {
  check_length(d.cluster(), c.mults());
  std::int64_t s = 0;
  for (std::size_t p = 0; p < d.size(); ++p) s += d.mult(p) * c.mult(p);
  return s;
}

std::int64_t support_total_size(const Divisor& d) {
  return std::count_if(d.mults().begin(), d.mults().end(), [](std::int64_t x) { return x != 0; });
}

std::int64_t codimension(const Divisor& d) {
  const Divisor closure = unload(d);
  std::int64_t total = 0;
  for (std::int64_t e : closure.mults()) total += e * (e + 1) / 2;
  return total;
}

}  // namespace curveta
