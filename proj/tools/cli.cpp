#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tc_atlas/algebra_io.hpp"
#include "tc_atlas/errors.hpp"
#include "tc_atlas/geometry.hpp"
#include "tc_atlas/harness.hpp"
#include "tc_atlas/planners_basic.hpp"
#include "tc_atlas/report_format.hpp"
#include "tc_atlas/spaces.hpp"
#include "tc_atlas/sphere_planner.hpp"
#include "tc_atlas/torus_planner.hpp"

namespace tc_atlas {

namespace {

using nlohmann::json;

std::vector<double> parse_numbers(const std::string& text, const char* what) {
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream is(s);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) throw ParseError(std::string("bad number '") + tok + "' in " + what);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(std::string("empty point for ") + what);
  return out;
}

Point to_point(const std::vector<double>& v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) p[static_cast<Eigen::Index>(i)] = v[i];
  return p;
}

std::string render_bounds(const std::vector<BoundReport>& rows, const std::string& format, bool certificates) {
  if (format == "json") {
    json doc = rows.size() == 1 ? report_to_json(rows.front(), certificates) : reports_to_json(rows, certificates);
    return doc.dump(2) + "\n";
  }
  if (format == "csv") return reports_to_csv(rows);
  return reports_to_text(rows, certificates);
}

json samples_json(const Path& path, int count) {
  json arr = json::array();
  for (const auto& p : path.sample(count)) arr.push_back(std::vector<double>(p.data(), p.data() + p.size()));
  return arr;
}

struct PlanArgs {
  std::string space;
  std::string a;
  std::string b;
  int samples = 101;
  bool midpoint_constant = false;
};

Point sphere_input(const std::string& text, int n, const char* which, std::ostream& err) {
  auto v = parse_numbers(text, which);
  if (n == 1 && v.size() == 1) return to_point({std::cos(v[0]), std::sin(v[0])});
  if (static_cast<int>(v.size()) != n + 1)
    throw ParseError(std::string(which) + " must have " + std::to_string(n + 1) + " coordinates");
  Point p = to_point(v);
  if (std::abs(p.norm() - 1.0) > 1e-6) err << "warning: " << which << " has norm " << p.norm() << "; normalizing\n";
  return sphere_point(p);
}

json run_plan(const PlanArgs& args, std::ostream& err) {
  if (args.samples < 2) throw ParseError("--samples must be at least 2");
  json doc;
  if (args.space.rfind("tree:", 0) == 0) {
    if (args.midpoint_constant) throw DomainError("--midpoint-constant is available only on T^n");
    std::ifstream in(args.space.substr(5));
    if (!in) throw ParseError("cannot open tree file '" + args.space.substr(5) + "'");
    const MetricTree tree = MetricTree::parse(in);
    const auto out = tree_plan(tree, parse_tree_point(args.a), parse_tree_point(args.b));
    json arr = json::array();
    for (const auto& p : out.path.sample(args.samples)) arr.push_back({p.edge, p.t});
    doc = {{"space", args.space}, {"region", out.region}, {"samples", arr}};
    return doc;
  }
  if (args.space == "convex") {
    if (args.midpoint_constant) throw DomainError("--midpoint-constant is available only on T^n");
    const auto out = convex_plan(to_point(parse_numbers(args.a, "--a")), to_point(parse_numbers(args.b, "--b")));
    return {{"space", args.space}, {"region", out.region}, {"samples", samples_json(out.path, args.samples)}};
  }
  const SpaceDescriptor space = parse_space(args.space);
  if (space.factors.size() != 1) throw ParseError("plan supports S^n, T^n, convex or tree:<file>");
  const auto& f = space.factors.front();
  if (f.family == SpaceFamily::Sphere) {
    if (args.midpoint_constant) throw DomainError("--midpoint-constant is available only on T^n");
    const SphereConfig cfg = SphereConfig::standard(f.parameter);
    const auto out = sphere_plan(cfg, sphere_input(args.a, f.parameter, "--a", err),
                                 sphere_input(args.b, f.parameter, "--b", err));
    return {{"space", space.name}, {"region", out.region}, {"samples", samples_json(out.path, args.samples)}};
  }
  if (f.family == SpaceFamily::Torus) {
    auto read = [&](const std::string& text, const char* which) {
      auto v = parse_numbers(text, which);
      if (static_cast<int>(v.size()) != f.parameter)
        throw ParseError(std::string(which) + " must have " + std::to_string(f.parameter) + " angles");
      return torus_point(to_point(v));
    };
    const Point a = read(args.a, "--a");
    const Point b = read(args.b, "--b");
    PlannerOutput out = args.midpoint_constant ? torus_midpoint_plan(TorusMidpointConfig::standard(f.parameter), a, b)
                                               : torus_symmetric_plan(a, b);
    doc = {{"space", space.name},
           {"region", out.region},
           {"region_code", out.region_code},
           {"samples", samples_json(out.path, args.samples)}};
    if (args.midpoint_constant) {
      const Point mid = out.path(0.5);
      doc["midpoint"] = std::vector<double>(mid.data(), mid.data() + mid.size());
    }
    return doc;
  }
  throw ParseError("plan supports S^n, T^n, convex or tree:<file>");
}

json algebra_summary(const GradedF2Algebra& a) {
  const auto ax = check_axioms(a);
  json doc = {{"dimension", a.dimension()},
              {"top_degree", a.top_degree()},
              {"axioms",
               {{"unit", ax.unit},
                {"associative", ax.associative},
                {"commutative", ax.commutative},
                {"graded", ax.graded},
                {"first_failure", ax.first_failure}}}};
  if (!ax.ok()) return doc;
  const auto square = tensor_square(a);
  doc["cl"] = cup_length(a, positive_part(a)).length;
  doc["zdcl"] = cup_length(square, diagonal_kernel(square)).length;
  doc["ncl"] = cup_length(square, norm_subspace(square)).length;
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and symmetric motion planners for topological complexity", "tc-atlas"};
  app.require_subcommand(1);

  std::string format = "text";
  const std::vector<std::string> formats{"json", "csv", "text"};

  std::string bounds_spec;
  bool certificates = false;
  auto* bounds = app.add_subcommand("bounds", "TC, TC^S and TC^S_sigma brackets for one space");
  bounds->add_option("spec", bounds_spec, "Space, e.g. T^3, Sigma_2, S^2 x RP^3")->required();
  bounds->add_option("--format", format)->check(CLI::IsMember(formats));
  bounds->add_flag("--certificates", certificates, "Include cup-length witnesses");

  std::string table_spaces;
  bool default_suite_flag = false;
  auto* table = app.add_subcommand("table", "Bound table for several spaces");
  auto* spaces_opt = table->add_option("--spaces", table_spaces, "Comma-separated space specs");
  auto* suite_opt = table->add_flag("--default-suite", default_suite_flag, "S^1..S^5, T^1..T^4, Sigma_1..Sigma_3, RP^2..RP^4");
  spaces_opt->excludes(suite_opt);
  table->add_option("--format", format)->check(CLI::IsMember(formats));

  PlanArgs plan_args;
  auto* plan = app.add_subcommand("plan", "Plan a motion between two points");
  plan->add_option("space", plan_args.space, "S^n, T^n, convex or tree:<file>")->required();
  plan->add_option("--a", plan_args.a, "Start point")->required();
  plan->add_option("--b", plan_args.b, "End point")->required();
  plan->add_option("--samples", plan_args.samples, "Sample count along the path");
  plan->add_flag("--midpoint-constant", plan_args.midpoint_constant, "Route through the base point (T^n only)");

  std::string planner_name;
  int verify_n = 2;
  int pairs = 10000;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Property-check a planner on random pairs");
  verify->add_option("planner", planner_name, "sphere, torus, torus-midpoint or convex")
      ->required()
      ->check(CLI::IsMember({"sphere", "torus", "torus-midpoint", "convex"}));
  verify->add_option("--n", verify_n, "Dimension")->check(CLI::Range(1, 64));
  verify->add_option("--pairs", pairs, "Number of random pairs")->check(CLI::Range(1, 100000000));
  verify->add_option("--seed", seed, "Random seed");

  std::string algebra_spec;
  std::string algebra_file;
  auto* algebra = app.add_subcommand("algebra", "Export a cohomology ring as JSON, or import and check one");
  auto* spec_opt = algebra->add_option("spec", algebra_spec, "Space spec to export");
  auto* file_opt = algebra->add_option("--file", algebra_file, "Algebra JSON to import");
  spec_opt->excludes(file_opt);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*bounds) {
      out << render_bounds({bound_report(bounds_spec)}, format, certificates);
    } else if (*table) {
      std::vector<std::string> specs;
      if (default_suite_flag) {
        specs = default_suite();
      } else if (!table_spaces.empty()) {
        std::stringstream ss(table_spaces);
        for (std::string item; std::getline(ss, item, ',');) specs.push_back(item);
      } else {
        err << "table: pass --spaces or --default-suite\n";
        return 2;
      }
      std::vector<BoundReport> rows;
      for (const auto& spec : specs) {
        try {
          rows.push_back(bound_report(spec));
        } catch (const std::exception& e) {
          err << "error: row '" << spec << "': " << e.what() << "\n";
          return 1;
        }
      }
      out << render_bounds(rows, format, false);
    } else if (*plan) {
      out << run_plan(plan_args, err).dump(2) << "\n";
    } else if (*verify) {
      CheckConfig cfg;
      cfg.pairs = pairs;
      cfg.seed = seed;
      const auto rep = check_planner(planner_under_test(planner_name, verify_n), cfg);
      out << rep.to_json().dump(2) << "\n";
      return rep.pass() ? 0 : 1;
    } else if (*algebra) {
      if (!algebra_file.empty()) {
        std::ifstream in(algebra_file);
        if (!in) throw ParseError("cannot open '" + algebra_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        const auto a = algebra_from_string(buf.str());
        const auto summary = algebra_summary(a);
        out << summary.dump(2) << "\n";
        return check_axioms(a).ok() ? 0 : 1;
      }
      if (algebra_spec.empty()) {
        err << "algebra: pass a space spec or --file\n";
        return 2;
      }
      out << algebra_to_string(build_cohomology(parse_space(algebra_spec)), 2) << "\n";
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tc_atlas
