#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curveta/divisor.hpp"
#include "curveta/kernels.hpp"
#include "curveta/maximal_contact.hpp"
#include "curveta/monomial_ideal.hpp"

namespace curveta {

/// Maximal contact element f (by position in the contact set) raised to power.
struct Selection {
  std::size_t position = 0;
  std::uint32_t power = 1;

  bool operator==(const Selection&) const = default;
};

/// Pairs (p, rho_p) with rho_p > 0, so that D = sum rho_p B_p.
std::vector<std::pair<PointId, std::int64_t>> zariski_factor(const Divisor& d);
/// The q with D = B_q, if D is simple.
std::optional<PointId> simple_point(const Divisor& d);
/// unload(B_q + E_O) for a simple B_q with q != O.
Divisor adjacent_divisor(const Divisor& bq);
/// A power of a maximal contact element in H_{B_q} but not in the adjacent ideal.
Selection select_element(const Divisor& bq, const MaximalContactSet& contacts);

struct TreeNode {
  Divisor divisor;
  std::optional<PointId> simple;
  /// Zariski components (child node, exponent).
  std::vector<std::pair<std::size_t, std::int64_t>> solid;
  /// Adjacent divisor node of a simple non-maximal node.
  std::optional<std::size_t> dashed;
  std::optional<Selection> selection;
  /// Pruned generators of the node's ideal.
  MonomialIdeal ideal;
  /// For simple nodes, (f^n) + H_adjacent before pruning.
  MonomialIdeal raw;
};

struct GeneratorTree {
  std::vector<TreeNode> nodes;
  std::size_t root = 0;
};

/// Memoised generator computation for one contact set; safe to share
/// between threads.
class GeneratorEngine {
 public:
  explicit GeneratorEngine(const MaximalContactSet& contacts, kernels::Exec exec = kernels::default_exec());

  MonomialIdeal generators(const Divisor& d);
  GeneratorTree tree(const Divisor& d);
  const MaximalContactSet& contacts() const { return contacts_; }

 private:
  MonomialIdeal simple_ideal(const Divisor& bq, PointId q, MonomialIdeal* raw, Selection* sel, Divisor* adj);
  MonomialIdeal composite_ideal(const Divisor& d);
  MonomialIdeal pruned_product(const MonomialIdeal& a, const Divisor& da, const MonomialIdeal& b,
                               const Divisor& db);
  std::size_t build(GeneratorTree& t, const Divisor& d);

  const MaximalContactSet& contacts_;
  kernels::Exec exec_;
  std::mutex mutex_;
  std::map<IntVec, MonomialIdeal> memo_;
};

struct GeneratorResult {
  MonomialIdeal ideal;
  GeneratorTree tree;
};

/// Generators of H_D as monomials in the contact elements; D is unloaded first.
GeneratorResult compute_generators(const Divisor& d, const MaximalContactSet& contacts,
                                   kernels::Exec exec = kernels::default_exec());

/// Graphviz rendering: nodes labelled by values, solid edges by exponent,
/// dashed edges by the selected element (as a polynomial when available).
std::string tree_to_dot(const GeneratorTree& tree, const MaximalContactSet& contacts);
std::string selection_label(const Selection& s, const MaximalContactSet& contacts);

}  // namespace curveta
