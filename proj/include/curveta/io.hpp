#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

#include "curveta/applications.hpp"
#include "curveta/cluster.hpp"
#include "curveta/divisor.hpp"
#include "curveta/generators.hpp"
#include "curveta/maximal_contact.hpp"
#include "curveta/monomial_ideal.hpp"

namespace curveta::io {

using nlohmann::json;

/// "a/b" or "a"; throws ParseError.
mpq_class parse_rational(std::string_view text);
std::string rational_string(const mpq_class& q);

/// {"points": n, "proximities": [[...], ...], "coords": {"3": "1/2"}}
ClusterPtr cluster_from_json(const json& j);
json cluster_to_json(const Cluster& c);

/// {"basis": "values" | "mults" | "excesses", "coeffs": [...]}, or the
/// {"values": ..., "mults": ..., "excesses": ...} form emitted below.
Divisor divisor_from_json(const json& j, ClusterPtr cluster);
json divisor_to_json(const Divisor& d);

json read_json_file(const std::string& path);

json monomial_to_json(const Monomial& m, const MaximalContactSet& contacts, bool with_poly);
json ideal_to_json(const MonomialIdeal& ideal, const MaximalContactSet& contacts, bool with_poly);
json contacts_to_json(const MaximalContactSet& contacts);
json tree_to_json(const GeneratorTree& tree, const MaximalContactSet& contacts);
json jumping_table_to_json(const JumpingTable& table, const MaximalContactSet& contacts, bool with_poly);
json filtration_to_json(const std::vector<FiltrationRow>& rows, const MaximalContactSet& contacts, bool with_poly);

}  // namespace curveta::io
