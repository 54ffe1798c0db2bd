#include "curveta/io.hpp"

#include <fstream>
#include <sstream>

#include "curveta/error.hpp"

namespace curveta::io {

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  auto integer = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start >= part.size() || part.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error(ErrorCode::ParseError, "not a rational number: \"" + s + "\"");
    return mpz_class(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return mpq_class(integer(s));
  mpz_class num = integer(s.substr(0, slash)), den = integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + s + "\"");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

mpq_class rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<long long>())));
  malformed("rational must be a string \"a/b\" or an integer");
}

}  // namespace

ClusterPtr cluster_from_json(const json& j) {
  if (!j.is_object() || !j.contains("proximities") || !j["proximities"].is_array())
    malformed("cluster needs a \"proximities\" array");
  std::vector<std::vector<PointId>> prox;
  for (const auto& row : j["proximities"]) {
    if (!row.is_array()) malformed("each proximity entry must be an array");
    std::vector<PointId> r;
    for (const auto& p : row) {
      if (!p.is_number_integer() || p.get<long long>() < 0) malformed("proximities hold point indices");
      r.push_back(p.get<PointId>());
    }
    prox.push_back(std::move(r));
  }
  if (j.contains("points")) {
    if (!j["points"].is_number_integer()) malformed("\"points\" must be an integer");
    if (j["points"].get<long long>() != static_cast<long long>(prox.size())) {
      std::ostringstream os;
      os << "\"points\" is " << j["points"].get<long long>() << " but " << prox.size() << " proximity lists given";
      throw Error(ErrorCode::LengthMismatch, os.str());
    }
  }
  std::map<PointId, mpq_class> coords;
  if (j.contains("coords")) {
    if (!j["coords"].is_object()) malformed("\"coords\" must be an object");
    for (const auto& [key, value] : j["coords"].items()) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        malformed("coordinate key \"" + key + "\" is not a point index");
      coords.emplace(static_cast<PointId>(std::stoull(key)), rational_from_json(value));
    }
  }
  return make_cluster(std::move(prox), std::move(coords));
}

json cluster_to_json(const Cluster& c) {
  json j;
  j["points"] = c.size();
  j["proximities"] = json::array();
  for (PointId q = 0; q < c.size(); ++q) j["proximities"].push_back(c.proximate_to(q));
  if (!c.coords().empty()) {
    j["coords"] = json::object();
    for (const auto& [p, u] : c.coords()) j["coords"][std::to_string(p)] = rational_string(u);
  }
  return j;
}

Divisor divisor_from_json(const json& j, ClusterPtr cluster) {
  if (!j.is_object()) malformed("divisor must be an object");
  // Emitted divisors carry all three bases; any one of them reads back.
  const bool emitted = !j.contains("coeffs") && j.contains("values");
  const char* key = emitted ? "values" : "coeffs";
  if (!j.contains(key) || !j[key].is_array()) malformed("divisor needs a \"coeffs\" array");
  const std::string basis = emitted ? std::string("values") : j.value("basis", std::string("values"));
  IntVec coeffs;
  for (const auto& x : j[key]) {
    if (!x.is_number_integer()) malformed("divisor coefficients must be integers");
    coeffs.push_back(x.get<std::int64_t>());
  }
  if (basis == "values") return Divisor::from_values(std::move(cluster), std::move(coeffs));
  if (basis == "mults") return Divisor::from_mults(std::move(cluster), std::move(coeffs));
  if (basis == "excesses") return Divisor::from_excesses(std::move(cluster), std::move(coeffs));
  malformed("unknown basis \"" + basis + "\"");
}

json divisor_to_json(const Divisor& d) {
  return json{{"values", d.values()}, {"mults", d.mults()}, {"excesses", d.excesses()}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

json monomial_to_json(const Monomial& m, const MaximalContactSet& contacts, bool with_poly) {
  json j;
  j["monomial"] = to_string(m, contacts);
  json exps = json::object();
  for (std::size_t d = 0; d < m.exps.size(); ++d)
    if (m.exps[d]) exps[std::to_string(contacts.elements[d].index)] = m.exps[d];
  j["exponents"] = exps;
  j["values"] = m.values;
  if (with_poly) j["poly"] = specialize(m, contacts).to_string();
  return j;
}

json ideal_to_json(const MonomialIdeal& ideal, const MaximalContactSet& contacts, bool with_poly) {
  json arr = json::array();
  for (const auto& m : ideal.gens) arr.push_back(monomial_to_json(m, contacts, with_poly));
  return arr;
}

json contacts_to_json(const MaximalContactSet& contacts) {
  json arr = json::array();
  for (std::size_t i = 0; i < contacts.size(); ++i) {
    const ContactElement& el = contacts.elements[i];
    json j;
    j["name"] = contacts.name(i);
    j["point"] = el.index;
    j["augmented"] = el.augmented;
    IntVec seq;
    for (auto e : el.mults)
      if (e) seq.push_back(e);
    j["multiplicity_sequence"] = seq;
    j["characteristic_exponents"] = el.puiseux.char_exponents;
    j["semigroup"] = el.semigroup.generators;
    if (el.poly) j["poly"] = el.poly->to_string();
    arr.push_back(j);
  }
  return json{{"elements", arr}, {"transverse", {contacts.name(contacts.transverse[0]), contacts.name(contacts.transverse[1])}}};
}

json tree_to_json(const GeneratorTree& tree, const MaximalContactSet& contacts) {
  json nodes = json::array();
  for (const auto& n : tree.nodes) {
    json j;
    j["values"] = n.divisor.values();
    if (n.simple) j["simple"] = *n.simple;
    json solid = json::array();
    for (const auto& [child, k] : n.solid) solid.push_back({{"child", child}, {"weight", k}});
    j["solid"] = solid;
    if (n.dashed) {
      j["dashed"] = {{"child", *n.dashed},
                     {"element", contacts.name(n.selection->position)},
                     {"power", n.selection->power},
                     {"label", selection_label(*n.selection, contacts)}};
    }
    nodes.push_back(j);
  }
  return json{{"root", tree.root}, {"nodes", nodes}};
}

json jumping_table_to_json(const JumpingTable& table, const MaximalContactSet& contacts, bool with_poly) {
  json arr = json::array();
  for (const auto& e : table.entries)
    arr.push_back({{"lambda", rational_string(e.lambda)},
                   {"divisor", e.divisor.values()},
                   {"ideal", ideal_to_json(e.ideal, contacts, with_poly)}});
  return arr;
}

json filtration_to_json(const std::vector<FiltrationRow>& rows, const MaximalContactSet& contacts, bool with_poly) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"index", r.index}, {"divisor", r.divisor.values()}, {"ideal", ideal_to_json(r.ideal, contacts, with_poly)}});
  return arr;
}

}  // namespace curveta::io
