#include "curveta/maximal_contact.hpp"

#include <numeric>
#include <sstream>

#include "curveta/error.hpp"

namespace curveta {

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
  throw Error(ErrorCode::InconsistentSequence, why);
}

std::string describe(const IntVec& xs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ")";
  return os.str();
}

}  // namespace

BranchChain branch_chain(const Cluster& cluster, PointId q) {
  IntVec rho(cluster.size(), 0);
  rho.at(q) = 1;
  const IntVec e = excesses_to_mults(cluster, rho);
  std::vector<std::size_t> position(cluster.size(), SIZE_MAX);
  BranchChain chain;
  for (PointId p = 0; p < cluster.size(); ++p) {
    if (e[p] == 0) continue;
    position[p] = chain.mults.size();
    chain.mults.push_back(e[p]);
    std::vector<std::size_t> prox;
    for (PointId t : cluster.proximate_to(p)) prox.push_back(position[t]);
    chain.proximities.push_back(std::move(prox));
  }
  return chain;
}

IntVec multiplicity_sequence(const Cluster& cluster, PointId q) {
  return branch_chain(cluster, q).mults;
}

PuiseuxData make_puiseux(std::int64_t n, IntVec char_exponents) {
  if (n < 1) inconsistent("multiplicity must be positive");
  PuiseuxData d;
  d.n = n;
  d.gcd_chain.push_back(n);
  std::int64_t prev = 0;
  for (std::int64_t m : char_exponents) {
    const std::int64_t g = d.gcd_chain.back();
    if (m <= prev || m <= n || g == 1 || m % g == 0)
      inconsistent("exponents " + describe(char_exponents) + " are not characteristic for n = " +
                   std::to_string(n));
    d.gcd_chain.push_back(std::gcd(g, m));
    prev = m;
  }
  if (d.gcd_chain.back() != 1)
    inconsistent("exponents " + describe(char_exponents) + " leave gcd " +
                 std::to_string(d.gcd_chain.back()));
  d.char_exponents = std::move(char_exponents);
  return d;
}

BranchChain generate_chain(const PuiseuxData& data, std::size_t tail) {
  BranchChain chain;
  auto add = [&](std::int64_t mult, std::vector<std::size_t> prox) {
    chain.mults.push_back(mult);
    chain.proximities.push_back(std::move(prox));
    return chain.mults.size() - 1;
  };
  auto add_free = [&](std::int64_t mult) {
    if (chain.mults.empty()) return add(mult, {});
    return add(mult, {chain.mults.size() - 1});
  };

  std::int64_t m_prev = 0;
  for (std::size_t i = 0; i < data.char_exponents.size(); ++i) {
    std::int64_t a = data.char_exponents[i] - m_prev, b = data.gcd_chain[i];
    m_prev = data.char_exponents[i];
    // Euclid on (a, b); block k holds h_k points of multiplicity r_k (r_0 = b).
    std::vector<std::int64_t> quotients, mults;
    for (std::int64_t x = a, y = b; y != 0;) {
      quotients.push_back(x / y);
      mults.push_back(y);
      std::int64_t r = x % y;
      x = y;
      y = r;
    }
    std::vector<std::size_t> block_last;
    std::size_t before = chain.mults.empty() ? SIZE_MAX : chain.mults.size() - 1;
    for (std::int64_t j = 0; j < quotients[0]; ++j) add_free(mults[0]);
    block_last.push_back(quotients[0] > 0 ? chain.mults.size() - 1 : before);
    for (std::size_t k = 1; k < quotients.size(); ++k) {
      for (std::int64_t j = 0; j < quotients[k]; ++j) {
        const std::size_t parent = chain.mults.size() - 1;
        if (k == 1 && j == 0) {
          add_free(mults[k]);
          continue;
        }
        const std::size_t other = (j == 0) ? block_last[k - 2] : block_last[k - 1];
        add(mults[k], {std::min(other, parent), std::max(other, parent)});
      }
      block_last.push_back(chain.mults.size() - 1);
    }
  }
  if (chain.mults.empty()) add_free(1);
  for (std::size_t t = 0; t < tail; ++t) add_free(1);
  return chain;
}

PuiseuxData characteristic_data(const BranchChain& chain) {
  const std::size_t size = chain.mults.size();
  if (size == 0 || chain.proximities.size() != size) inconsistent("empty or ragged chain");
  const std::int64_t n = chain.mults[0];
  IntVec exps;
  std::int64_t n_prev = n, m_prev = 0;
  std::size_t pos = 0;
  while (n_prev > 1) {
    std::size_t free = 0, sat = 0;
    while (pos + free < size && chain.proximities[pos + free].size() <= 1) ++free;
    while (pos + free + sat < size && chain.proximities[pos + free + sat].size() == 2) ++sat;
    if (free == 0 || sat == 0) inconsistent("sequence " + describe(chain.mults) + " is not a branch");
    const std::int64_t r1 = chain.mults[pos + free - 1];
    const std::int64_t n_next = chain.mults[pos + free + sat - 1];
    if (r1 >= n_prev || n_next >= n_prev || r1 <= 0)
      inconsistent("sequence " + describe(chain.mults) + " is not a branch");
    const std::int64_t m = m_prev + static_cast<std::int64_t>(free - 1) * n_prev + r1;
    exps.push_back(m);
    m_prev = m;
    n_prev = n_next;
    pos += free + sat;
  }
  PuiseuxData data = make_puiseux(n, exps);
  const std::size_t tail = (pos == 0) ? size - 1 : size - pos;
  if (generate_chain(data, tail) != chain)
    inconsistent("sequence " + describe(chain.mults) + " does not match its own characteristic data");
  return data;
}

SemigroupData semigroup_generators(const PuiseuxData& data) {
  SemigroupData s;
  s.generators.push_back(data.n);
  std::int64_t weighted = 0;  // sum over j < i of (n_{j-1} - n_j) m_j
  for (std::size_t i = 0; i < data.char_exponents.size(); ++i) {
    const std::int64_t m = data.char_exponents[i];
    s.generators.push_back(weighted / data.gcd_chain[i] + m);
    weighted += (data.gcd_chain[i] - data.gcd_chain[i + 1]) * m;
  }
  return s;
}

std::optional<std::size_t> MaximalContactSet::position_of(PointId index) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].index == index) return i;
  return std::nullopt;
}

std::string MaximalContactSet::name(std::size_t position) const {
  return "f" + std::to_string(elements.at(position).index);
}

bool MaximalContactSet::has_polynomials() const {
  for (const auto& el : elements)
    if (!el.poly) return false;
  return true;
}

namespace {

MaximalContactSet build(ClusterPtr cluster, const ChartLayout* layout, std::size_t choice) {
  const Cluster& c = *cluster;
  MaximalContactSet set;
  set.cluster = cluster;
  const DualGraph g = dual_graph(c);

  std::vector<std::size_t> smooth;
  for (PointId d : g.dead_ends) {
    ContactElement el;
    el.index = d;
    const Divisor b = branch_divisor(cluster, d);
    el.mults = b.mults();
    el.values = b.values();
    el.puiseux = characteristic_data(branch_chain(c, d));
    el.semigroup = semigroup_generators(el.puiseux);
    if (layout) el.poly = canonical_polynomial(*layout, d, choice);
    if (el.mults[0] == 1) smooth.push_back(set.elements.size());
    set.elements.push_back(std::move(el));
  }

  // Smooth branches are transverse iff their chains leave O in different
  // directions; the curvette at O itself is a line missing every direction.
  auto first_step = [&](std::size_t pos) -> PointId {
    for (PointId p = 1; p < c.size(); ++p)
      if (set.elements[pos].mults[p] != 0) return p;
    return kNoCurve;
  };
  std::vector<std::size_t> chosen;
  for (std::size_t pos : smooth) {
    if (chosen.empty()) {
      chosen.push_back(pos);
    } else if (chosen.size() == 1) {
      PointId a = first_step(chosen[0]), b = first_step(pos);
      if (a == kNoCurve || b == kNoCurve || a != b) chosen.push_back(pos);
    }
  }

  const bool origin_dead_end = !g.dead_ends.empty() && g.dead_ends.front() == 0;
  for (std::size_t k = 0; chosen.size() < 2; ++k) {
    ContactElement el;
    el.index = c.size() + k;
    el.augmented = true;
    const Divisor b = branch_divisor(cluster, 0);
    el.mults = b.mults();
    el.values = b.values();
    el.puiseux = make_puiseux(1, {});
    el.semigroup = semigroup_generators(el.puiseux);
    if (layout) el.poly = oracle::curvette(*layout, 0, origin_dead_end ? choice + 1 + k : k);
    chosen.push_back(set.elements.size());
    set.elements.push_back(std::move(el));
  }
  set.transverse[0] = chosen[0];
  set.transverse[1] = chosen[1];
  return set;
}

}  // namespace

MaximalContactSet maximal_contact_set(ClusterPtr cluster) { return build(std::move(cluster), nullptr, 0); }

MaximalContactSet maximal_contact_set(const ChartLayout& layout, std::size_t choice) {
  return build(layout.cluster_ptr(), &layout, choice);
}

Poly canonical_polynomial(const ChartLayout& layout, PointId q, std::size_t choice) {
  Poly f = oracle::curvette(layout, q, choice);
  const IntVec expected = branch_divisor(layout.cluster_ptr(), q).mults();
  const IntVec got = oracle::multiplicities(f, layout);
  if (got != expected) {
    std::ostringstream os;
    os << "curvette " << f.to_string() << " at point " << q << " has multiplicities " << describe(got)
       << ", expected " << describe(expected);
    throw Error(ErrorCode::OracleMismatch, os.str());
  }
  return f;
}

}  // namespace curveta
