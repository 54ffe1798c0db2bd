#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curveta/divisor.hpp"
#include "curveta/kernels.hpp"
#include "curveta/maximal_contact.hpp"
#include "curveta/polynomial.hpp"

namespace curveta {

/// Formal product of maximal contact elements. exps is indexed by element
/// position in the contact set; values caches v_p of the product.
struct Monomial {
  std::vector<std::uint32_t> exps;
  IntVec values;

  std::uint64_t degree() const;
  bool divides(const Monomial& other) const;
  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Ascending total degree, ties by descending exponent vector.
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialIdeal {
  std::vector<Monomial> gens;

  std::size_t size() const { return gens.size(); }
  bool operator==(const MonomialIdeal& o) const { return gens == o.gens; }
};

Monomial unit_monomial(const MaximalContactSet& set);
Monomial variable_power(const MaximalContactSet& set, std::size_t position, std::uint32_t k = 1);
Monomial multiply(const Monomial& a, const Monomial& b);
/// Values recomputed from exponents against the contact set.
IntVec monomial_values(const Monomial& m, const MaximalContactSet& set);

std::int64_t monomial_valuation(const Monomial& m, PointId p);
bool member(const Monomial& m, const Divisor& d);

MonomialIdeal unit_ideal(const MaximalContactSet& set);
MonomialIdeal make_ideal(std::vector<Monomial> gens, kernels::Exec exec = kernels::default_exec());
/// Drops duplicates and multiples, sorts canonically.
MonomialIdeal normalize(MonomialIdeal ideal, kernels::Exec exec = kernels::default_exec());
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b, kernels::Exec exec = kernels::default_exec());
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b, kernels::Exec exec = kernels::default_exec());
MonomialIdeal power(const MonomialIdeal& a, std::uint64_t k, kernels::Exec exec = kernels::default_exec());
/// Removes generators whose values dominate `threshold` entrywise.
MonomialIdeal drop_members(const MonomialIdeal& ideal, const IntVec& threshold,
                           kernels::Exec exec = kernels::default_exec());
/// Removes members of D + Ebar_O, then multiples. Every generator must lie in H_D.
MonomialIdeal nakayama_prune(const MonomialIdeal& ideal, const Divisor& d,
                             kernels::Exec exec = kernels::default_exec());

/// Expands every monomial with the explicit polynomials of the set.
std::vector<Poly> specialize(const MonomialIdeal& ideal, const MaximalContactSet& set);
Poly specialize(const Monomial& m, const MaximalContactSet& set);

/// "f0^5*f1"; the unit monomial prints as "1".
std::string to_string(const Monomial& m, const MaximalContactSet& set);

kernels::MonomialBlock to_block(const std::vector<Monomial>& gens);
std::vector<Monomial> from_block(const kernels::MonomialBlock& block);

}  // namespace curveta
