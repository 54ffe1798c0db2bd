#include "curveta/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "curveta/error.hpp"

namespace curveta {

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exps.size(); ++k)
    if (exps[k] > other.exps[k]) return false;
  return true;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps > b.exps;
}

Monomial unit_monomial(const MaximalContactSet& set) {
  return {std::vector<std::uint32_t>(set.size(), 0), IntVec(set.cluster->size(), 0)};
}

Monomial variable_power(const MaximalContactSet& set, std::size_t position, std::uint32_t k) {
  Monomial m = unit_monomial(set);
  m.exps.at(position) = k;
  m.values = monomial_values(m, set);
  return m;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t k = 0; k < out.exps.size(); ++k) out.exps[k] += b.exps[k];
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += b.values[k];
  return out;
}

IntVec monomial_values(const Monomial& m, const MaximalContactSet& set) {
  IntVec v(set.cluster->size(), 0);
  for (std::size_t d = 0; d < m.exps.size(); ++d)
    for (std::size_t p = 0; p < v.size(); ++p) v[p] += static_cast<std::int64_t>(m.exps[d]) * set.elements[d].values[p];
  return v;
}

std::int64_t monomial_valuation(const Monomial& m, PointId p) { return m.values.at(p); }

bool member(const Monomial& m, const Divisor& d) {
  for (std::size_t p = 0; p < d.size(); ++p)
    if (m.values[p] < d.value(p)) return false;
  return true;
}

kernels::MonomialBlock to_block(const std::vector<Monomial>& gens) {
  kernels::MonomialBlock b;
  if (gens.empty()) return b;
  b.nvars = gens.front().exps.size();
  b.npts = gens.front().values.size();
  b.exps.reserve(gens.size() * b.nvars);
  b.vals.reserve(gens.size() * b.npts);
  for (const auto& m : gens) {
    b.exps.insert(b.exps.end(), m.exps.begin(), m.exps.end());
    b.vals.insert(b.vals.end(), m.values.begin(), m.values.end());
  }
  return b;
}

std::vector<Monomial> from_block(const kernels::MonomialBlock& block) {
  std::vector<Monomial> out(block.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].exps.assign(block.exp_row(i), block.exp_row(i) + block.nvars);
    out[i].values.assign(block.val_row(i), block.val_row(i) + block.npts);
  }
  return out;
}

MonomialIdeal unit_ideal(const MaximalContactSet& set) { return {{unit_monomial(set)}}; }

MonomialIdeal normalize(MonomialIdeal ideal, kernels::Exec exec) {
  const auto block = to_block(ideal.gens);
  const auto keep = kernels::minimal_mask(block, exec);
  MonomialIdeal out;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) out.gens.push_back(std::move(ideal.gens[i]));
  std::sort(out.gens.begin(), out.gens.end(), canonical_less);
  return out;
}

MonomialIdeal make_ideal(std::vector<Monomial> gens, kernels::Exec exec) {
  return normalize(MonomialIdeal{std::move(gens)}, exec);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b, kernels::Exec exec) {
  MonomialIdeal out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return normalize(std::move(out), exec);
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b, kernels::Exec exec) {
  if (a.gens.empty() || b.gens.empty()) return {};
  return normalize(MonomialIdeal{from_block(kernels::pairwise_products(to_block(a.gens), to_block(b.gens), exec))},
                   exec);
}

MonomialIdeal power(const MonomialIdeal& a, std::uint64_t k, kernels::Exec exec) {
  if (a.gens.empty()) return k == 0 ? MonomialIdeal{} : a;
  MonomialIdeal result{{Monomial{std::vector<std::uint32_t>(a.gens[0].exps.size(), 0),
                                 IntVec(a.gens[0].values.size(), 0)}}};
  MonomialIdeal base = a;
  while (k) {
    if (k & 1u) result = product(result, base, exec);
    k >>= 1u;
    if (k) base = product(base, base, exec);
  }
  return result;
}

MonomialIdeal drop_members(const MonomialIdeal& ideal, const IntVec& threshold, kernels::Exec exec) {
  const auto mask = kernels::membership_mask(to_block(ideal.gens), threshold, exec);
  MonomialIdeal out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (!mask[i]) out.gens.push_back(ideal.gens[i]);
  return out;
}

MonomialIdeal nakayama_prune(const MonomialIdeal& ideal, const Divisor& d, kernels::Exec exec) {
  const auto in_d = kernels::membership_mask(to_block(ideal.gens), d.values(), exec);
  for (std::size_t i = 0; i < in_d.size(); ++i)
    if (!in_d[i]) throw Error(ErrorCode::PreconditionViolated, "generator is not a member of the divisor's ideal");
  const Divisor raised = d + total_transform(d.cluster_ptr(), 0);
  return normalize(drop_members(ideal, raised.values(), exec), exec);
}

Poly specialize(const Monomial& m, const MaximalContactSet& set) {
  Poly out(1);
  for (std::size_t d = 0; d < m.exps.size(); ++d) {
    if (m.exps[d] == 0) continue;
    const auto& poly = set.elements[d].poly;
    if (!poly) throw Error(ErrorCode::MissingPolynomial, "no explicit polynomial for " + set.name(d));
    out = out * poly->pow(m.exps[d]);
  }
  return out;
}

std::vector<Poly> specialize(const MonomialIdeal& ideal, const MaximalContactSet& set) {
  std::vector<Poly> out;
  out.reserve(ideal.gens.size());
  for (const auto& m : ideal.gens) out.push_back(specialize(m, set));
  return out;
}

std::string to_string(const Monomial& m, const MaximalContactSet& set) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t d = 0; d < m.exps.size(); ++d) {
    if (m.exps[d] == 0) continue;
    os << (any ? "*" : "") << set.name(d);
    if (m.exps[d] > 1) os << "^" << m.exps[d];
    any = true;
  }
  return any ? os.str() : "1";
}

}  // namespace curveta
