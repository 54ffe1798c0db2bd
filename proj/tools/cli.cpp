#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "curveta/applications.hpp"
#include "curveta/error.hpp"
#include "curveta/generators.hpp"
#include "curveta/io.hpp"
#include "curveta/kernels.hpp"
#include "curveta/maximal_contact.hpp"
#include "curveta/valuation_oracle.hpp"

namespace curveta::cli {

namespace {

struct Options {
  std::string cluster_path;
  std::string divisor_path;
  bool explicit_polys = false;
  bool tree = false;
  std::string max_lambda = "1";
  std::string lambda;
  long long point = -1;
  long long upto = 0;
  std::string output = "text";
  std::string poly;
  int threads = 0;
};

std::string join(const IntVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string seq(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  ClusterPtr cluster() {
    if (!cluster_) cluster_ = io::cluster_from_json(io::read_json_file(o_.cluster_path));
    return cluster_;
  }

  Divisor divisor() { return io::divisor_from_json(io::read_json_file(o_.divisor_path), cluster()); }

  const MaximalContactSet& contacts() {
    if (!contacts_) {
      if (o_.explicit_polys) {
        layout_.emplace(cluster());
        contacts_ = maximal_contact_set(*layout_);
      } else {
        contacts_ = maximal_contact_set(cluster());
      }
    }
    return *contacts_;
  }

  const ChartLayout& layout() {
    if (!layout_) layout_.emplace(cluster());
    return *layout_;
  }

  bool json() const { return o_.output == "json"; }

  void print_json(const io::json& j) { out_ << j.dump(2) << "\n"; }

  std::string ideal_line(const MonomialIdeal& ideal) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
      os << (i ? ", " : "");
      if (o_.explicit_polys) os << specialize(ideal.gens[i], contacts()).to_string();
      else os << to_string(ideal.gens[i], contacts());
    }
    return os.str();
  }

  void print_divisor(const Divisor& d) {
    if (json()) return print_json(io::divisor_to_json(d));
    out_ << "values: " << join(d.values()) << "\n"
         << "mults: " << join(d.mults()) << "\n"
         << "excesses: " << join(d.excesses()) << "\n";
  }

  void print_ideal(const MonomialIdeal& ideal, const GeneratorTree* tree) {
    const bool dot = o_.output == "dot" || (o_.tree && o_.output == "text");
    if (json()) {
      io::json j{{"generators", io::ideal_to_json(ideal, contacts(), o_.explicit_polys)}};
      if (tree) j["tree"] = io::tree_to_json(*tree, contacts());
      return print_json(j);
    }
    if (dot && tree) {
      out_ << tree_to_dot(*tree, contacts());
      return;
    }
    for (const auto& m : ideal.gens) {
      out_ << to_string(m, contacts());
      if (o_.explicit_polys) out_ << " = " << specialize(m, contacts()).to_string();
      out_ << "\n";
    }
  }

  int unload_cmd() {
    print_divisor(unload(divisor()));
    return 0;
  }

  int factor_cmd() {
    const auto factors = zariski_factor(unload(divisor()));
    if (json()) {
      io::json arr = io::json::array();
      for (const auto& [p, k] : factors) arr.push_back({{"point", p}, {"weight", k}});
      print_json(arr);
      return 0;
    }
    for (const auto& [p, k] : factors) out_ << "B_" << p << " " << k << "\n";
    return 0;
  }

  int contacts_cmd() {
    const MaximalContactSet& set = contacts();
    if (json()) {
      print_json(io::contacts_to_json(set));
      return 0;
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      const ContactElement& el = set.elements[i];
      IntVec s;
      for (auto e : el.mults)
        if (e) s.push_back(e);
      out_ << set.name(i) << (el.augmented ? " augmented" : " point " + std::to_string(el.index))
           << ": sequence " << seq(s) << " exponents " << seq(el.puiseux.char_exponents) << " semigroup <";
      for (std::size_t k = 0; k < el.semigroup.generators.size(); ++k)
        out_ << (k ? "," : "") << el.semigroup.generators[k];
      out_ << ">";
      if (el.poly) out_ << " poly " << el.poly->to_string();
      out_ << "\n";
    }
    out_ << "transverse: " << set.name(set.transverse[0]) << " " << set.name(set.transverse[1]) << "\n";
    return 0;
  }

  int gens_cmd() {
    const GeneratorResult r = compute_generators(unload(divisor()), contacts());
    print_ideal(r.ideal, (o_.tree || o_.output == "dot") ? &r.tree : nullptr);
    return 0;
  }

  int mult_cmd() {
    if (o_.lambda.empty()) throw Error(ErrorCode::ParseError, "mult needs --lambda");
    const MultiplierIdeal m = multiplier_ideal(divisor(), io::parse_rational(o_.lambda), contacts());
    if (json()) {
      print_json({{"lambda", io::rational_string(io::parse_rational(o_.lambda))},
                  {"divisor", m.divisor.values()},
                  {"ideal", io::ideal_to_json(m.ideal, contacts(), o_.explicit_polys)}});
      return 0;
    }
    out_ << "divisor: " << join(m.divisor.values()) << "\n" << "ideal: " << ideal_line(m.ideal) << "\n";
    return 0;
  }

  int jumps_cmd() {
    const JumpingTable t = jumping_numbers(divisor(), io::parse_rational(o_.max_lambda), contacts());
    if (json()) {
      print_json(io::jumping_table_to_json(t, contacts(), o_.explicit_polys));
      return 0;
    }
    for (const auto& e : t.entries) out_ << io::rational_string(e.lambda) << " | " << ideal_line(e.ideal) << "\n";
    return 0;
  }

  int filtration_cmd() {
    if (o_.point < 0 || static_cast<std::size_t>(o_.point) >= cluster()->size())
      throw Error(ErrorCode::ParseError, "filtration needs --point inside the cluster");
    const auto rows = valuation_filtration(cluster(), static_cast<PointId>(o_.point), o_.upto, contacts());
    if (json()) {
      print_json(io::filtration_to_json(rows, contacts(), o_.explicit_polys));
      return 0;
    }
    for (const auto& r : rows) out_ << r.index << " | " << ideal_line(r.ideal) << "\n";
    return 0;
  }

  int verify_cmd() {
    const Poly f = parse_poly(o_.poly);
    const Divisor d = divisor();
    const IntVec v = oracle::values(f, layout());
    const bool in = oracle::member_poly(f, d, layout());
    if (json()) {
      print_json({{"poly", f.to_string()}, {"values", v}, {"divisor", d.values()}, {"member", in}});
      return 0;
    }
    out_ << "values: " << join(v) << "\n" << "member: " << (in ? "true" : "false") << "\n";
    return 0;
  }

  int mults_cmd() {
    const Poly f = parse_poly(o_.poly);
    const IntVec e = oracle::multiplicities(f, layout());
    const IntVec v = mults_to_values(*cluster(), e);
    if (json()) {
      print_json({{"poly", f.to_string()}, {"mults", e}, {"values", v}});
      return 0;
    }
    out_ << "mults: " << join(e) << "\n" << "values: " << join(v) << "\n";
    return 0;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  ClusterPtr cluster_;
  std::optional<ChartLayout> layout_;
  std::optional<MaximalContactSet> contacts_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Complete ideals on surfaces as monomials in maximal contact elements", "curveta"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "worker threads for parallel kernels (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--output", o.output, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto with_cluster = [&](CLI::App* s) {
    s->add_option("cluster", o.cluster_path, "cluster JSON file")->required();
    return s;
  };
  auto with_divisor = [&](CLI::App* s) {
    with_cluster(s);
    s->add_option("divisor", o.divisor_path, "divisor JSON file")->required();
    return s;
  };
  auto explicit_flag = [&](CLI::App* s) {
    s->add_flag("--explicit", o.explicit_polys, "print explicit polynomials");
    return s;
  };

  with_divisor(app.add_subcommand("unload", "antinef closure in all three bases"));
  with_divisor(app.add_subcommand("factor", "Zariski factorisation of the closure"));
  explicit_flag(with_cluster(app.add_subcommand("contacts", "maximal contact elements")));
  auto* gens = explicit_flag(with_divisor(app.add_subcommand("gens", "generators of H_D")));
  gens->add_flag("--tree", o.tree, "emit the recursion tree");
  auto* closure = explicit_flag(with_divisor(app.add_subcommand("closure", "integral closure H_F")));
  closure->add_flag("--tree", o.tree, "emit the recursion tree");
  auto* mult = explicit_flag(with_divisor(app.add_subcommand("mult", "multiplier ideal at one lambda")));
  mult->add_option("--lambda", o.lambda, "exponent a/b")->required();
  auto* jumps = explicit_flag(with_divisor(app.add_subcommand("jumps", "jumping numbers below --max")));
  jumps->add_option("--max", o.max_lambda, "upper bound a/b (exclusive)");
  auto* filt = explicit_flag(with_cluster(app.add_subcommand("filtration", "valuation filtration at a point")));
  filt->add_option("--point", o.point, "point index")->required();
  filt->add_option("--upto", o.upto, "last index")->required();
  auto* verify = with_divisor(app.add_subcommand("verify", "oracle membership of a polynomial"));
  verify->add_option("--poly", o.poly, "polynomial in x, y")->required();
  auto* mults = with_cluster(app.add_subcommand("mults", "oracle multiplicities of a polynomial"));
  mults->add_option("--poly", o.poly, "polynomial in x, y")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  kernels::set_thread_count(o.threads);
  Session s(o, out);
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "unload") return s.unload_cmd();
    if (name == "factor") return s.factor_cmd();
    if (name == "contacts") return s.contacts_cmd();
    if (name == "gens" || name == "closure") return s.gens_cmd();
    if (name == "mult") return s.mult_cmd();
    if (name == "jumps") return s.jumps_cmd();
    if (name == "filtration") return s.filtration_cmd();
    if (name == "verify") return s.verify_cmd();
    if (name == "mults") return s.mults_cmd();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  }
  err << "unknown subcommand " << name << "\n";
  return 2;
}

}  // namespace curveta::cli
