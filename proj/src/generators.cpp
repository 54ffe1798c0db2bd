#include "curveta/generators.hpp"

#include <sstream>

#include "curveta/error.hpp"

namespace curveta {

std::vector<std::pair<PointId, std::int64_t>> zariski_factor(const Divisor& d) {
  if (!d.is_antinef()) throw Error(ErrorCode::NotAntinef, "Zariski factorisation needs an antinef divisor");
  std::vector<std::pair<PointId, std::int64_t>> out;
  for (PointId p = 0; p < d.size(); ++p)
    if (d.excess(p) > 0) out.emplace_back(p, d.excess(p));
  return out;
}

std::optional<PointId> simple_point(const Divisor& d) {
  std::optional<PointId> found;
  for (PointId p = 0; p < d.size(); ++p) {
    if (d.excess(p) == 0) continue;
    if (d.excess(p) != 1 || found) return std::nullopt;
    found = p;
  }
  return found;
}

Divisor adjacent_divisor(const Divisor& bq) {
  const auto q = simple_point(bq);
  if (!q) throw Error(ErrorCode::PreconditionViolated, "adjacent divisor needs a simple divisor B_q");
  if (*q == 0) throw Error(ErrorCode::IsMaximalIdeal, "B_O is the maximal ideal");
  return unload(bq + exceptional_curve(bq.cluster_ptr(), 0));
}

Selection select_element(const Divisor& bq, const MaximalContactSet& contacts) {
  const auto q = simple_point(bq);
  if (!q) throw Error(ErrorCode::PreconditionViolated, "element selection needs a simple divisor B_q");
  if (*q == 0) throw Error(ErrorCode::IsMaximalIdeal, "B_O is the maximal ideal");
  const Cluster& c = bq.cluster();

  PointId last_free = 0;
  for (PointId p = 1; p < c.size(); ++p)
    if (bq.mult(p) != 0 && c.classify(p) == PointKind::Free) last_free = p;

  const std::int64_t eq = bq.mult(0);
  for (std::size_t pos = 0; pos < contacts.size(); ++pos) {
    const ContactElement& el = contacts.elements[pos];
    if (el.augmented || el.mults[last_free] != 1) continue;
    const std::int64_t et = el.mults[0];
    if (et > eq || eq % et != 0) continue;
    Selection s{pos, static_cast<std::uint32_t>(eq / et)};
    const Monomial f = variable_power(contacts, pos, s.power);
    const Divisor adj = adjacent_divisor(bq);
    if (!member(f, bq) || member(f, adj)) {
      std::ostringstream os;
      os << contacts.name(pos) << "^" << s.power << " is not in H_{B_" << *q << "} minus the adjacent ideal";
      throw Error(ErrorCode::NoAdmissibleElement, os.str());
    }
    return s;
  }
  std::ostringstream os;
  os << "no dead-end curvette fits B_" << *q;
  throw Error(ErrorCode::NoAdmissibleElement, os.str());
}

GeneratorEngine::GeneratorEngine(const MaximalContactSet& contacts, kernels::Exec exec)
    : contacts_(contacts), exec_(exec) {}

MonomialIdeal GeneratorEngine::pruned_product(const MonomialIdeal& a, const Divisor& da, const MonomialIdeal& b,
                                              const Divisor& db) {
  const Divisor bound = da + db + total_transform(da.cluster_ptr(), 0);
  return normalize(drop_members(product(a, b, exec_), bound.values(), exec_), exec_);
}

MonomialIdeal GeneratorEngine::simple_ideal(const Divisor& bq, PointId q, MonomialIdeal* raw, Selection* sel,
                                            Divisor* adj) {
  if (q == 0) {
    MonomialIdeal m = make_ideal({variable_power(contacts_, contacts_.transverse[0]),
                                  variable_power(contacts_, contacts_.transverse[1])},
                                 exec_);
    if (raw) *raw = m;
    return m;
  }
  const Divisor adjacent = adjacent_divisor(bq);
  const Selection s = select_element(bq, contacts_);
  MonomialIdeal all{{variable_power(contacts_, s.position, s.power)}};
  const MonomialIdeal below = generators(adjacent);
  all.gens.insert(all.gens.end(), below.gens.begin(), below.gens.end());
  if (raw) *raw = all;
  if (sel) *sel = s;
  if (adj) *adj = adjacent;
  return nakayama_prune(all, bq, exec_);
}

MonomialIdeal GeneratorEngine::composite_ideal(const Divisor& d) {
  const ClusterPtr& c = d.cluster_ptr();
  MonomialIdeal acc = unit_ideal(contacts_);
  Divisor acc_div = zero_divisor(c);
  for (const auto& [p, k] : zariski_factor(d)) {
    const Divisor bp = branch_divisor(c, p);
    MonomialIdeal pw = unit_ideal(contacts_), base = generators(bp);
    Divisor pw_div = zero_divisor(c), base_div = bp;
    for (auto e = static_cast<std::uint64_t>(k); e != 0;) {
      if (e & 1u) {
        pw = pruned_product(pw, pw_div, base, base_div);
        pw_div = pw_div + base_div;
      }
      e >>= 1u;
      if (e) {
        base = pruned_product(base, base_div, base, base_div);
        base_div = base_div * 2;
      }
    }
    acc = pruned_product(acc, acc_div, pw, pw_div);
    acc_div = acc_div + pw_div;
  }
  return nakayama_prune(acc, d, exec_);
}

MonomialIdeal GeneratorEngine::generators(const Divisor& input) {
  const Divisor d = input.is_antinef() ? input : unload(input);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(d.values()); it != memo_.end()) return it->second;
  }
  MonomialIdeal result;
  if (d.is_zero()) {
    result = unit_ideal(contacts_);
  } else if (auto q = simple_point(d)) {
    result = simple_ideal(d, *q, nullptr, nullptr, nullptr);
  } else {
    result = composite_ideal(d);
  }
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(d.values(), std::move(result)).first->second;
}

std::size_t GeneratorEngine::build(GeneratorTree& t, const Divisor& d) {
  const std::size_t index = t.nodes.size();
  t.nodes.push_back(TreeNode{d, simple_point(d), {}, std::nullopt, std::nullopt, {}, {}});
  if (d.is_zero()) {
    t.nodes[index].ideal = unit_ideal(contacts_);
    return index;
  }
  if (auto q = t.nodes[index].simple) {
    MonomialIdeal raw;
    Selection sel;
    Divisor adj = d;
    MonomialIdeal ideal = simple_ideal(d, *q, &raw, &sel, &adj);
    t.nodes[index].ideal = std::move(ideal);
    t.nodes[index].raw = std::move(raw);
    if (*q != 0) {
      t.nodes[index].selection = sel;
      const std::size_t child = build(t, adj);
      t.nodes[index].dashed = child;
    }
    return index;
  }
  t.nodes[index].ideal = generators(d);
  for (const auto& [p, k] : zariski_factor(d)) {
    const std::size_t child = build(t, branch_divisor(d.cluster_ptr(), p));
    t.nodes[index].solid.emplace_back(child, k);
  }
  return index;
}

GeneratorTree GeneratorEngine::tree(const Divisor& input) {
  GeneratorTree t;
  t.root = build(t, input.is_antinef() ? input : unload(input));
  return t;
}

GeneratorResult compute_generators(const Divisor& d, const MaximalContactSet& contacts, kernels::Exec exec) {
  GeneratorEngine engine(contacts, exec);
  GeneratorResult r;
  r.ideal = engine.generators(d);
  r.tree = engine.tree(d);
  return r;
}

std::string selection_label(const Selection& s, const MaximalContactSet& contacts) {
  const auto& poly = contacts.elements.at(s.position).poly;
  std::string base = poly ? poly->to_string() : contacts.name(s.position);
  if (s.power == 1) return base;
  if (poly && poly->term_count() > 1) base = "(" + base + ")";
  return base + "^" + std::to_string(s.power);
}

std::string tree_to_dot(const GeneratorTree& tree, const MaximalContactSet& contacts) {
  std::ostringstream os;
  os << "digraph generators {\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const IntVec& v = tree.nodes[i].divisor.values();
    os << "  n" << i << " [label=\"";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& n = tree.nodes[i];
    if (n.dashed)
      os << "  n" << i << " -> n" << *n.dashed << " [style=dashed, label=\""
         << selection_label(*n.selection, contacts) << "\"];\n";
    for (const auto& [child, k] : n.solid)
      os << "  n" << i << " -> n" << child << " [style=solid, label=\"" << k << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace curveta
