#include "curveta/valuation_oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "curveta/error.hpp"

namespace curveta {

ChartLayout::ChartLayout(ClusterPtr cluster) : cluster_(std::move(cluster)) {
  const Cluster& c = *cluster_;
  const std::size_t n = c.size();
  steps_.assign(n, {});
  axis_a_.assign(n, kNoCurve);
  axis_b_.assign(n, kNoCurve);

  // Explicit coordinates per exceptional curve, then defaults in point order.
  std::vector<std::set<mpq_class>> taken(n);
  for (const auto& [q, u] : c.coords()) {
    if (!taken[c.parent(q)].insert(u).second) {
      std::ostringstream os;
      os << "two free points on E_" << c.parent(q) << " share coordinate " << u.get_str();
      throw Error(ErrorCode::InvalidCoordinate, os.str());
    }
  }
  coords_ = c.coords();
  for (PointId q = 1; q < n; ++q) {
    if (c.classify(q) != PointKind::Free || coords_.contains(q)) continue;
    mpq_class u = 0;
    while (taken[c.parent(q)].contains(u)) ++u;
    taken[c.parent(q)].insert(u);
    coords_.emplace(q, u);
  }

  for (PointId q = 1; q < n; ++q) {
    const PointId p = c.parent(q);
    ChartStep& s = steps_[q];
    s.parent = p;
    if (c.classify(q) == PointKind::Free) {
      const mpq_class& u = coords_.at(q);
      if (c.classify(p) == PointKind::Satellite && u == -1) {
        std::ostringstream os;
        os << "coordinate -1 of point " << q << " is the satellite point of E_" << p;
        throw Error(ErrorCode::InvalidCoordinate, os.str());
      }
      s.shift = direction(p, u);
      axis_a_[q] = p;
      continue;
    }
    const PointId other = c.proximate_to(q).front();
    if (axis_a_[p] == other) {
      s.chart_b = true;
      axis_a_[q] = other;
      axis_b_[q] = p;
    } else if (axis_b_[p] == other) {
      axis_a_[q] = p;
      axis_b_[q] = other;
    } else {
      std::ostringstream os;
      os << "point " << q << ": E_" << other << " does not pass through " << p;
      throw Error(ErrorCode::GeometricallyInfeasibleSatellite, os.str());
    }
  }
}

mpq_class ChartLayout::direction(PointId q, const mpq_class& u) const {
  return cluster_->classify(q) == PointKind::Satellite ? mpq_class(u + 1) : u;
}

mpq_class ChartLayout::unused_coordinate(PointId q, std::size_t choice) const {
  std::set<mpq_class> used;
  for (PointId child : cluster_->proximate_points(q))
    if (cluster_->parent(child) == q && cluster_->classify(child) == PointKind::Free)
      used.insert(coords_.at(child));
  mpq_class u = 0;
  for (std::size_t skipped = 0;; ++u) {
    if (used.contains(u)) continue;
    if (skipped++ == choice) return u;
  }
}

namespace oracle {

namespace {

void guard(const Poly& f) {
  if (f.term_count() > kOracleTermLimit) {
    std::ostringstream os;
    os << "polynomial with " << f.term_count() << " terms exceeds the limit of " << kOracleTermLimit;
    throw Error(ErrorCode::ResourceLimit, os.str());
  }
}

const Poly kA = Poly::x();
const Poly kB = Poly::y();

Poly chart_a(const Poly& f, const mpq_class& c) { return f.compose(kA, kA * kB + kA * c); }
Poly chart_b(const Poly& f) { return f.compose(kA * kB, kB); }

UniPoly dehomogenise(const Poly& form) {
  // T(1, t): coefficient of x^(d-j) y^j goes to t^j.
  UniPoly u(static_cast<std::size_t>(form.degree_y() + 1), 0);
  for (const auto& [e, c] : form.terms()) u[e.second] = c;
  return u;
}

std::int64_t im(const Poly& f, const Poly& g, std::int64_t so_far, std::int64_t bound) {
  if (f.constant_term() != 0 || g.constant_term() != 0) return 0;
  const int ef = f.order(), eg = g.order();
  std::int64_t total = static_cast<std::int64_t>(ef) * eg;
  if (so_far + total > bound)
    throw Error(ErrorCode::CommonComponent, "intersection exceeds the Bezout bound");

  const Poly tf = f.homogeneous_part(ef), tg = g.homogeneous_part(eg);
  UniPoly common = uni_gcd(dehomogenise(tf), dehomogenise(tg));
  auto roots = rational_roots(common);
  UniPoly rest = common;
  for (const auto& r : roots) {
    // Divide out every factor (t - r).
    while (rest.size() > 1) {
      UniPoly q(rest.size() - 1);
      mpq_class carry = 0;
      for (std::size_t i = rest.size(); i-- > 1;) {
        carry = carry * r + rest[i];
        q[i - 1] = carry;
      }
      if (carry * r + rest[0] != 0) break;
      rest = std::move(q);
    }
  }
  if (rest.size() > 1)
    throw Error(ErrorCode::UnsupportedTangent, "common tangent direction is not rational");

  for (const auto& r : roots) {
    Poly f1 = chart_a(f, r).divide_x_power(ef);
    Poly g1 = chart_a(g, r).divide_x_power(eg);
    guard(f1);
    guard(g1);
    total += im(f1, g1, so_far + total, bound);
  }
  // The direction x = 0 is tangent to f iff x divides its tangent form.
  if (tf.x_valuation() > 0 && tg.x_valuation() > 0) {
    Poly f1 = chart_b(f).divide_y_power(ef);
    Poly g1 = chart_b(g).divide_y_power(eg);
    guard(f1);
    guard(g1);
    total += im(f1, g1, so_far + total, bound);
  }
  return total;
}

}  // namespace

Poly strict_transform(const Poly& f, const ChartStep& step, std::int64_t e) {
  Poly out = step.chart_b ? chart_b(f).divide_y_power(static_cast<int>(e))
                          : chart_a(f, step.shift).divide_x_power(static_cast<int>(e));
  guard(out);
  return out;
}

IntVec multiplicities(const Poly& f, const ChartLayout& layout) {
  if (f.is_zero()) throw Error(ErrorCode::PreconditionViolated, "zero polynomial has no multiplicities");
  const std::size_t n = layout.cluster().size();
  std::vector<Poly> local(n);
  IntVec e(n, 0);
  local[0] = f;
  e[0] = f.order();
  for (PointId q = 1; q < n; ++q) {
    const ChartStep& s = layout.step(q);
    local[q] = strict_transform(local[s.parent], s, e[s.parent]);
    e[q] = local[q].order();
  }
  return e;
}

IntVec values(const Poly& f, const ChartLayout& layout) {
  return mults_to_values(layout.cluster(), multiplicities(f, layout));
}

bool member_poly(const Poly& f, const Divisor& d, const ChartLayout& layout) {
  if (f.is_zero()) return true;
  const IntVec v = values(f, layout);
  for (std::size_t p = 0; p < v.size(); ++p)
    if (v[p] < d.value(p)) return false;
  return true;
}

std::int64_t intersection_mult(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorCode::CommonComponent, "zero polynomial shares every component");
  const std::int64_t bound = static_cast<std::int64_t>(f.degree()) * g.degree();
  return im(f, g, 0, bound);
}

Poly push_down(const Poly& local, const ChartLayout& layout, PointId q) {
  Poly g = local;
  for (PointId cur = q; cur != 0; cur = layout.step(cur).parent) {
    const ChartStep& s = layout.step(cur);
    Poly next;
    if (s.chart_b) {
      // a' = a / b, b' = b.
      const int d = g.degree_x();
      for (const auto& [e, c] : g.terms()) next += Poly::monomial(e.first, e.second - e.first + d, c);
      next = next.divide_y_power(next.y_valuation());
    } else {
      // a' = a, b' = b / a - shift.
      const int d = g.degree_y();
      const Poly shifted = kB - kA * s.shift;
      for (const auto& [e, c] : g.terms())
        next += Poly::monomial(e.first + d - e.second, 0, c) * shifted.pow(static_cast<unsigned>(e.second));
      next = next.divide_x_power(next.x_valuation());
    }
    guard(next);
    g = std::move(next);
  }
  return g.monic();
}

namespace {

using Series = std::vector<mpq_class>;

Series truncated(Series a, std::size_t len) {
  a.resize(len, 0);
  return a;
}

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series uni_mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  return series_mul(a, b, a.size() + b.size() - 1);
}

std::size_t series_order(const Series& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return i;
  return a.size();
}

/// r^(1/n) for r(0) = 1, by the power recurrence P_k = sum ((alpha+1) j - k) r_j P_{k-j} / k.
Series series_root(const Series& r, std::int64_t n, std::size_t len) {
  const mpq_class alpha(1, n);
  Series p(len, 0);
  p[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k && j < r.size(); ++j)
      acc += ((alpha + 1) * static_cast<long>(j) - static_cast<long>(k)) * r[j] * p[k - j];
    p[k] = acc / static_cast<long>(k);
  }
  return p;
}

Series series_inverse(const Series& a, std::size_t len) {
  Series inv(len, 0);
  inv[0] = 1 / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * inv[k - j];
    inv[k] = -acc * inv[0];
  }
  return inv;
}

/// Norm of y - W(s) over Q[x][s] / (s^n - x / alpha): the single branch
/// x = alpha s^n, y = W(s), as the characteristic polynomial of
/// multiplication by W (Faddeev-LeVerrier).
Poly branch_norm(const Series& w, std::int64_t n, const mpq_class& alpha) {
  const auto dim = static_cast<std::size_t>(n);
  const Poly step = kA * (1 / alpha);
  std::vector<Poly> part(dim);
  Poly scale(1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k % dim == 0 && k) scale = scale * step;
    if (w[k] != 0) part[k % dim] += scale * w[k];
  }
  using Matrix = std::vector<std::vector<Poly>>;
  Matrix a(dim, std::vector<Poly>(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < dim; ++r) {
      if (part[r].is_zero()) continue;
      if (r + j < dim) a[r + j][j] += part[r];
      else a[r + j - dim][j] += part[r] * step;
    }
  auto mul = [&](const Matrix& l, const Matrix& m) {
    Matrix out(dim, std::vector<Poly>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        if (l[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
          if (!m[k][j].is_zero()) out[i][j] += l[i][k] * m[k][j];
      }
    return out;
  };
  std::vector<Poly> coeff(dim + 1);
  coeff[dim] = Poly(1);
  Matrix m(dim, std::vector<Poly>(dim));
  for (std::size_t k = 1; k <= dim; ++k) {
    Matrix next = mul(a, m);
    for (std::size_t i = 0; i < dim; ++i) next[i][i] += coeff[dim - k + 1];
    m = std::move(next);
    const Matrix am = mul(a, m);
    Poly trace;
    for (std::size_t i = 0; i < dim; ++i) trace += am[i][i];
    coeff[dim - k] = trace * mpq_class(-1, static_cast<long>(k));
  }
  Poly f;
  for (std::size_t i = 0; i <= dim; ++i) f += coeff[i] * Poly::monomial(0, static_cast<int>(i));
  guard(f);
  return f;
}

/// Curvette of q as one branch: the line b = c a in q's frame parametrised by
/// t, mapped down to (x, y), reparametrised so one coordinate is a pure
/// power, truncated as short as keeps B_q and the direction at q, and
/// implicitised by a norm.
Poly branch_curvette(const ChartLayout& layout, PointId q, const mpq_class& c) {
  Series a{0, 1}, b{0, c};
  for (PointId cur = q; cur != 0; cur = layout.step(cur).parent) {
    const ChartStep& s = layout.step(cur);
    if (s.chart_b) {
      a = uni_mul(a, b);
    } else {
      Series shifted = b;
      shifted[0] += s.shift;
      b = uni_mul(a, shifted);
    }
  }
  const std::size_t ox = series_order(a), oy = series_order(b);
  if (ox == a.size()) return kA;
  if (oy == b.size()) return kB;
  const bool swapped = oy < ox;
  const Series& u = swapped ? b : a;
  const Series& v = swapped ? a : b;
  const std::size_t n = std::min(ox, oy);

  const Divisor bq = branch_divisor(layout.cluster_ptr(), q);
  const std::size_t len = static_cast<std::size_t>(intersect(bq, bq)) + n + 2;
  const mpq_class alpha = u[n];
  Series r(len, 0);
  for (std::size_t k = n; k < u.size() && k - n < len; ++k) r[k - n] = u[k] / alpha;
  // s = t rho(t); t(s) by Lagrange-Buermann with phi = 1 / rho.
  const Series phi = series_inverse(series_root(r, static_cast<std::int64_t>(n), len), len);
  Series dv(len, 0);
  for (std::size_t k = 1; k < v.size() && k <= len; ++k) dv[k - 1] = v[k] * static_cast<long>(k);
  Series w(len, 0);
  Series phik{1};
  for (std::size_t k = 1; k < len; ++k) {
    phik = series_mul(phik, phi, len);
    mpq_class acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc += dv[i] * phik[k - 1 - i];
    w[k] = acc / static_cast<long>(k);
  }
  const IntVec expected = bq.mults();
  auto implicit = [&](std::size_t keep) {
    Poly f = branch_norm(truncated(w, keep), static_cast<std::int64_t>(n), alpha);
    if (swapped) f = f.compose(kB, kA);
    return f.monic();
  };
  // Realises B_q and leaves q in direction c.
  auto realises = [&](const Poly& f) {
    if (multiplicities(f, layout) != expected) return false;
    std::vector<PointId> chain;
    for (PointId cur = q; cur != 0; cur = layout.step(cur).parent) chain.push_back(cur);
    Poly local = f;
    int e = f.order();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      local = strict_transform(local, layout.step(*it), e);
      e = local.order();
    }
    return chart_a(local, c).divide_x_power(e).constant_term() == 0;
  };
  // Shortest valid truncation; validity is monotone in the truncation length
  // once past the last coefficient that matters.
  std::size_t lo = n + 1, hi = len;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (realises(implicit(mid))) hi = mid;
    else lo = mid + 1;
  }
  Poly f = implicit(hi);
  if (!realises(f)) throw Error(ErrorCode::OracleMismatch, "truncated branch does not realise the curvette");
  return f;
}

}  // namespace

Poly curvette(const ChartLayout& layout, PointId q, std::size_t choice) {
  if (q == 0) {
    if (choice == 0) return kA;
    return (kB - kA * layout.unused_coordinate(0, choice - 1)).monic();
  }
  const mpq_class c = layout.direction(q, layout.unused_coordinate(q, choice));
  // The pushed-down line can meet an exceptional curve away from the
  // cluster and pick up extra branches at O; fall back to a single branch.
  Poly line = push_down(kB - kA * c, layout, q);
  if (multiplicities(line, layout) == branch_divisor(layout.cluster_ptr(), q).mults()) return line;
  return branch_curvette(layout, q, c);
}

}  // namespace oracle

}  // namespace curveta
