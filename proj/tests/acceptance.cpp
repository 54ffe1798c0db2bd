#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "curveta/applications.hpp"
#include "curveta/generators.hpp"
#include "curveta/valuation_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_cluster.hpp"
#include "support/reference.hpp"

using namespace curveta;

namespace {

/// Collects the first failure of a criterion.
struct Verdict {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::set<std::string> poly_strings(const std::vector<Poly>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(p.to_string());
  return out;
}

std::set<std::string> parsed_strings(std::initializer_list<const char*> texts) {
  std::set<std::string> out;
  for (const char* t : texts) out.insert(parse_poly(t).to_string());
  return out;
}

std::vector<std::string> rendered(const MonomialIdeal& ideal, const MaximalContactSet& set) {
  std::vector<std::string> out;
  for (const auto& m : ideal.gens) out.push_back(to_string(m, set));
  return out;
}

IntVec lowest_values(const std::vector<Poly>& polys, const ChartLayout& layout) {
  IntVec lowest(layout.cluster().size(), INT64_MAX);
  for (const Poly& f : polys) {
    const IntVec v = oracle::values(f, layout);
    for (std::size_t p = 0; p < v.size(); ++p) lowest[p] = std::min(lowest[p], v[p]);
  }
  return lowest;
}

/// Mutual divisor membership of a listed ideal and our generators of H_d.
bool same_ideal(const char* listed, const Divisor& d, const MonomialIdeal& ours, const MaximalContactSet& set,
                const ChartLayout& layout) {
  std::vector<Poly> table;
  for (const auto& s : testsupport::split_top(listed)) table.push_back(parse_poly(s));
  for (const Poly& f : table)
    if (!oracle::member_poly(f, d, layout)) return false;
  if (unload(Divisor::from_values(d.cluster_ptr(), lowest_values(table, layout))) != d) return false;
  const std::vector<Poly> mine = specialize(ours, set);
  for (const Poly& f : mine)
    if (!oracle::member_poly(f, d, layout)) return false;
  return unload(Divisor::from_values(d.cluster_ptr(), lowest_values(mine, layout))) == d;
}

bool dominates(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

Verdict generators_of_branch_divisor() {
  Verdict v;
  auto c = testsupport::two_pair_cluster();
  ChartLayout layout(c);
  MaximalContactSet set = maximal_contact_set(layout);
  const MonomialIdeal ideal = compute_generators(Divisor::from_values(c, {4, 6, 12, 13, 26}), set).ideal;
  const auto names = rendered(ideal, set);
  v.require(std::set<std::string>(names.begin(), names.end()) ==
                std::set<std::string>{"f3^2", "f0^7", "f0^5*f1", "f0^4*f1^2", "f0^2*f1^3", "f0*f1^4"},
            "monomial set differs");
  v.require(poly_strings(specialize(ideal, set)) ==
                parsed_strings({"(y^2 - x^3)^2", "x^7", "x^5y", "x^4y^2", "x^2y^3", "xy^4"}),
            "specialisation differs from the integral closure list");
  return v;
}

Verdict recursion_tree() {
  Verdict v;
  auto c = testsupport::two_pair_cluster();
  MaximalContactSet set = maximal_contact_set(ChartLayout(c));
  const GeneratorTree t = compute_generators(Divisor::from_values(c, {4, 6, 12, 13, 26}), set).tree;
  const TreeNode& root = t.nodes[t.root];
  v.require(root.divisor.values() == IntVec{4, 6, 12, 13, 26}, "root");
  v.require(root.dashed && selection_label(*root.selection, set) == "(y^2 - x^3)^2", "root dashed edge");
  if (!v.ok) return v;
  const TreeNode& adj = t.nodes[*root.dashed];
  v.require(adj.divisor.values() == IntVec{5, 7, 13, 13, 26}, "adjacent node");
  std::vector<std::int64_t> weights;
  for (auto [child, k] : adj.solid) weights.push_back(k);
  v.require(weights == std::vector<std::int64_t>{2, 1, 1}, "solid weights");
  if (!v.ok) return v;
  const TreeNode& p1 = t.nodes[adj.solid[1].first];
  const TreeNode& p2 = t.nodes[adj.solid[2].first];
  v.require(p1.selection && selection_label(*p1.selection, set) == "y", "dashed label y");
  v.require(p2.selection && selection_label(*p2.selection, set) == "y^2", "dashed label y^2");
  v.require(p1.dashed && t.nodes[*p1.dashed].divisor.values() == IntVec{2, 2, 4, 4, 8}, "node 2,2,4,4,8");
  v.require(p2.dashed && t.nodes[*p2.dashed].divisor.values() == IntVec{3, 3, 6, 6, 12}, "node 3,3,6,6,12");
  std::size_t leaves = 0;
  for (const auto& n : t.nodes)
    if (n.solid.empty() && !n.dashed) {
      ++leaves;
      v.require(n.divisor.values() == IntVec{1, 1, 2, 2, 4}, "leaf is not B_O");
    }
  v.require(leaves == 3 && t.nodes.size() == 9, "tree shape");
  return v;
}

Verdict jumping_table() {
  Verdict v;
  auto c = testsupport::cusp_ideal_cluster();
  ChartLayout layout(c);
  MaximalContactSet set = maximal_contact_set(layout);
  const Divisor f = Divisor::from_values(c, testsupport::cusp_ideal_f());
  const JumpingTable table = jumping_numbers(f, 1, set);
  const auto& rows = testsupport::published_jumps();
  v.require(table.entries.size() == rows.size(), "number of jumps " + std::to_string(table.entries.size()));
  for (std::size_t i = 0; v.ok && i < rows.size(); ++i) {
    mpq_class want(rows[i].key);
    want.canonicalize();
    v.require(table.entries[i].lambda == want, std::string("jump ") + rows[i].key);
    v.require(same_ideal(rows[i].ideal, table.entries[i].divisor, table.entries[i].ideal, set, layout),
              std::string("ideal at ") + rows[i].key);
  }
  return v;
}

Verdict filtration_table() {
  Verdict v;
  auto c = testsupport::two_pair_cluster();
  ChartLayout layout(c);
  MaximalContactSet set = maximal_contact_set(layout);
  const auto rows = valuation_filtration(c, 4, 26, set);
  const auto& published = testsupport::published_filtration();
  v.require(rows.size() == published.size(), "row count");
  for (std::size_t i = 0; v.ok && i < rows.size(); ++i)
    v.require(same_ideal(published[i].ideal, rows[i].divisor, rows[i].ideal, set, layout),
              std::string("row ") + published[i].key);
  bool slot = false;
  if (rows.size() >= 13)
    for (const auto& m : rows[12].ideal.gens) slot = slot || m.values == branch_divisor(c, 3).values();
  v.require(slot, "row 13 lacks the y^2 - x^3 slot");
  return v;
}

Verdict property_suites() {
  Verdict v;
  std::mt19937 rng(2718);
  for (int trial = 0; v.ok && trial < 200; ++trial) {
    auto c = testsupport::random_cluster_upto(rng, 10);
    const std::size_t n = c->size();
    IntVec raw(n);
    for (auto& x : raw) x = std::uniform_int_distribution<std::int64_t>(-5, 9)(rng);
    const Divisor d = Divisor::from_values(c, raw);
    v.require(Divisor::from_mults(c, d.mults()).values() == raw && Divisor::from_excesses(c, d.excesses()).values() == raw,
              "basis roundtrip");
    const IntMatrix p = proximity_matrix(*c);
    v.require(intersection_matrix(*c) == -(p.transpose() * p), "N = -P^T P");
    IntVec pos(n);
    for (auto& x : pos) x = std::uniform_int_distribution<std::int64_t>(0, 9)(rng);
    const Divisor u = unload(Divisor::from_values(c, pos));
    v.require(u.is_antinef() && unload(u) == u, "unload idempotent and antinef");
    v.require(u.values() == testsupport::unload_one_at_a_time(*c, pos), "unload against one-step reference");
    IntVec sum(n, 0);
    for (PointId q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) sum[k] += u.excess(q) * branch_divisor(c, q).value(k);
    v.require(sum == u.values(), "Zariski reconstruction");

    MaximalContactSet set = maximal_contact_set(c);
    for (PointId q = 1; q < n; ++q) {
      const Divisor bq = branch_divisor(c, q);
      const Divisor adj = adjacent_divisor(bq);
      v.require(adj.mult(0) == bq.mult(0) + 1, "e_O(adjacent) = e_O + 1");
      for (PointId r = 1; r < n; ++r) v.require(bq.mult(r) - adj.mult(r) <= 1, "multiplicity drop");
      v.require(codimension(adj) == codimension(bq) + 1, "codimension + 1");
      v.require(adj.excess(0) > 0, "rho_O(adjacent) > 0");
      if (c->classify(q) == PointKind::Satellite) {
        std::int64_t squares = 0;
        for (auto e : bq.mults()) squares += e * e;
        const PuiseuxData data = characteristic_data(branch_chain(*c, q));
        v.require(squares == data.gcd_chain[data.char_exponents.size() - 1] *
                                 semigroup_generators(data).generators.back(),
                  "satellite self-intersection");
      }
    }
    IntVec rho(n);
    for (auto& x : rho) x = std::uniform_int_distribution<std::int64_t>(0, 2)(rng);
    rho[n - 1] += 1;
    const Divisor target = Divisor::from_excesses(c, rho);
    const GeneratorResult r = compute_generators(target, set);
    const IntVec bound = (target + total_transform(c, 0)).values();
    for (const auto& m : r.ideal.gens) {
      v.require(member(m, target), "generator outside H_D");
      v.require(!dominates(m.values, bound), "generator in H_{D + E_O}");
    }
    for (PointId q = 0; q < n; ++q) {
      if (target.excess(q) <= 0) continue;
      bool hit = false;
      for (const auto& m : r.ideal.gens) hit = hit || m.values[q] == target.value(q);
      v.require(hit, "excess saturation");
    }
    for (const auto& node : r.tree.nodes) {
      if (!node.dashed) continue;
      const TreeNode& below = r.tree.nodes[*node.dashed];
      v.require(support_total_size(below.divisor) < support_total_size(node.divisor), "support decrease");
      const Monomial f = variable_power(set, node.selection->position, node.selection->power);
      v.require(member(f, node.divisor) && !member(f, below.divisor), "selection admissibility");
    }
  }
  return v;
}

Verdict invariance() {
  Verdict v;
  std::mt19937 rng(31415);
  for (int trial = 0; v.ok && trial < 25; ++trial) {
    auto base = testsupport::random_cluster_upto(rng, 9);
    auto moved = std::make_shared<const Cluster>(base->with_coords(testsupport::random_coords(rng, *base)));
    const Divisor d = branch_divisor(base, base->size() - 1) + branch_divisor(base, base->size() / 2);
    MaximalContactSet plain = maximal_contact_set(ChartLayout(base));
    MaximalContactSet shifted = maximal_contact_set(ChartLayout(moved));
    MaximalContactSet other = maximal_contact_set(ChartLayout(base), 1);
    const auto expected = rendered(compute_generators(d, plain).ideal, plain);
    v.require(rendered(compute_generators(Divisor::from_values(moved, d.values()), shifted).ideal, shifted) == expected,
              "perturbed coordinates change the output");
    v.require(rendered(compute_generators(d, other).ideal, other) == expected,
              "alternative curvettes change the output");
  }
  return v;
}

Verdict oracle_cross_check() {
  Verdict v;
  {
    auto c = testsupport::two_pair_cluster();
    ChartLayout layout(c);
    const Poly x = Poly::x(), y = Poly::y(), cusp = y * y - x.pow(3);
    const Poly f = cusp.pow(2) - x.pow(5) * y;
    v.require(oracle::multiplicities(f, layout) == IntVec{4, 2, 2, 1, 1}, "branch multiplicities");
    v.require(oracle::values(f, layout) == IntVec{4, 6, 12, 13, 26}, "branch values");
    v.require(oracle::intersection_mult(f, x) == 4 && oracle::intersection_mult(f, y) == 6 &&
                  oracle::intersection_mult(f, cusp) == 13,
              "semigroup intersections");
    MaximalContactSet set = maximal_contact_set(layout);
    const Divisor d = Divisor::from_values(c, {4, 6, 12, 13, 26});
    for (const Poly& g : specialize(compute_generators(d, set).ideal, set))
      v.require(oracle::member_poly(g, d, layout), "two-pair generator fails the oracle");
  }
  std::mt19937 rng(1618);
  int clusters = 0;
  for (int trial = 0; v.ok && trial < 600 && clusters < 60; ++trial) {
    auto base = testsupport::random_cluster_upto(rng, 8);
    auto c = std::make_shared<const Cluster>(base->with_coords(testsupport::random_coords(rng, *base)));
    ChartLayout layout(c);
    MaximalContactSet set = maximal_contact_set(layout);
    const Divisor d = branch_divisor(c, c->size() - 1);
    if (d.mult(0) > 4) continue;
    const MonomialIdeal ideal = compute_generators(d, set).ideal;
    const std::vector<Poly> polys = specialize(ideal, set);
    bool small = true;
    for (const auto& p : polys) small = small && p.term_count() <= 400;
    if (!small) continue;
    ++clusters;
    for (const Poly& g : polys) v.require(oracle::member_poly(g, d, layout), "generator fails the oracle");
    Monomial m = unit_monomial(set);
    for (std::size_t i = 0; i < set.size(); ++i)
      m = multiply(m, variable_power(set, i, std::uniform_int_distribution<std::uint32_t>(0, 3)(rng)));
    const Poly g = specialize(m, set);
    if (g.term_count() <= 400) v.require(oracle::values(g, layout) == m.values, "monomial values vs oracle");
  }
  v.require(clusters >= 50, "only " + std::to_string(clusters) + " clusters checked");
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"generators of the two-pair branch divisor", generators_of_branch_divisor, 1.0},
      {"recursion tree of the two-pair branch divisor", recursion_tree, 0.0},
      {"jumping numbers below one and multiplier ideals", jumping_table, 10.0},
      {"valuation filtration rows 1..26", filtration_table, 10.0},
      {"randomised property suites", property_suites, 0.0},
      {"invariance under coordinates and curvette choice", invariance, 0.0},
      {"oracle cross-check", oracle_cross_check, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && criteria[i].limit_seconds > 0 && secs >= criteria[i].limit_seconds) {
      v.ok = false;
      std::ostringstream os;
      os << "over the " << criteria[i].limit_seconds << " s budget";
      v.why = os.str();
    }
    std::printf("%s %zu %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                v.ok ? "" : ": ", v.why.c_str());
    failed += v.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
