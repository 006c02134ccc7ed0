// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "mutants.hpp"
#include "oracle.hpp"
#include "tc_atlas/cover_tools.hpp"
#include "tc_atlas/geometry.hpp"
#include "tc_atlas/harness.hpp"
#include "tc_atlas/spaces.hpp"
#include "tc_atlas/sphere_planner.hpp"
#include "tc_atlas/torus_planner.hpp"

using namespace tc_atlas;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_.size() < 4) failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome done() const {
    std::string d = notes_;
    for (const auto& f : failures_) d += (d.empty() ? "" : "; ") + std::string("FAILED: ") + f;
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  std::string notes_;
  std::vector<std::string> failures_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome bound_table_reproduction() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = bound_table(default_suite());
  const double secs = elapsed(t0);
  c.require(rows.size() == 15, "15 rows");
  for (const auto& r : rows) {
    const auto& f = r.space.factors.front();
    const std::string name = r.space.name;
    const int n = f.parameter;
    switch (f.family) {
      case SpaceFamily::Torus:
        c.require(r.cl == n, name + " cl");
        c.require(r.tcs_sigma.lower.value == 2 * n + 1 && r.tcs_sigma.upper.value == 2 * n + 1, name + " TC^S_sigma");
        c.require(r.tc.lower.value == n + 1, name + " TC lower");
        break;
      case SpaceFamily::Surface:
        c.require(r.cl == 2, name + " cl");
        c.require(r.tcs_sigma.lower.value == 5 && r.tcs_sigma.upper.value == 5, name + " TC^S_sigma");
        break;
      case SpaceFamily::Sphere:
        c.require(r.tcs.lower.value == 3 && r.tcs.upper.value == 3, name + " TC^S");
        break;
      default:
        break;
    }
    c.require(r.consistent(), name + " consistency");
  }
  c.require(secs < 5.0, "runtime " + fmt(secs) + " s");
  c.note("15 rows in " + fmt(secs) + " s");
  return c.done();
}

Outcome oracle_equivalence() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  int compared = 0;
  std::vector<std::string> specs{"point"};
  for (int n = 1; n <= 15; ++n) specs.push_back("S^" + std::to_string(n));
  for (int n = 1; n <= 4; ++n) specs.push_back("T^" + std::to_string(n));
  for (int g = 1; g <= 7; ++g) specs.push_back("Sigma_" + std::to_string(g));
  for (int n = 1; n <= 15; ++n) specs.push_back("RP^" + std::to_string(n));
  for (const char* p : {"S^1 x S^2", "S^2 x RP^2", "RP^3 x S^1", "Sigma_1 x S^2", "RP^2 x RP^3", "S^1 x T^2"})
    specs.push_back(p);
  for (const auto& spec : specs) {
    const auto a = build_cohomology(parse_space(spec));
    const auto fa = oracle::DenseAlgebra::from(a);
    c.require(cup_length(a, positive_part(a)).length == oracle::cup_length(fa, oracle::positive_basis(fa)), spec + " cl");
    ++compared;
    if (a.dimension() * a.dimension() > 16) continue;
    const auto t = tensor_square(a);
    const auto ft = oracle::DenseAlgebra::from(t);
    c.require(cup_length(t, diagonal_kernel(t)).length == oracle::cup_length(ft, oracle::kernel_elements(ft, fa)),
              spec + " zdcl");
    c.require(cup_length(t, norm_subspace(t)).length ==
                  oracle::cup_length(ft, oracle::span_elements(oracle::norm_generators(ft, fa))),
              spec + " ncl");
    c.require(cup_length(t, positive_part(t)).length == oracle::cup_length(ft, oracle::positive_basis(ft)),
              spec + " cl of square");
    compared += 3;
  }
  const double secs = elapsed(t0);
  c.require(secs < 60.0, "runtime " + fmt(secs) + " s");
  c.note(std::to_string(compared) + " algebra/subspace pairs in " + fmt(secs) + " s");
  return c.done();
}

Outcome structural_invariants() {
  Criterion c;
  auto specs = default_suite();
  for (const char* p : {"point", "S^1 x S^1 x S^2", "S^1 x S^2", "S^2 x RP^3", "Sigma_2 x S^1", "RP^5"}) specs.push_back(p);
  for (const auto& spec : specs) {
    const auto inv = compute_invariants(parse_space(spec));
    c.require(check_axioms(inv.algebra).ok(), spec + " axioms");
    c.require(check_axioms(inv.square).ok(), spec + " square axioms");
    bool closed = true;
    for (const auto& x : inv.norms.rows())
      for (const auto& y : inv.norms.rows()) closed = closed && inv.norms.contains(inv.square.mul(x, y));
    c.require(closed, spec + " N.N in N");
    c.require(inv.zero_divisors.contains(inv.norms), spec + " N in I");
    c.require(inv.zdcl.length >= inv.ncl.length, spec + " cl(I) >= cl(N)");
  }
  c.note(std::to_string(specs.size()) + " spaces");
  return c.done();
}

Outcome sphere_suite() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  double sym = 0.0, end = 0.0, cont = 0.0, anti = 0.0;
  for (int n : {1, 2, 3, 7}) {
    CheckConfig cfg;
    cfg.pairs = 10000;
    const auto rep = check_planner(sphere_under_test(n), cfg);
    const std::string tag = "S^" + std::to_string(n);
    c.require(rep.pass(), tag + " property suite");
    std::set<std::string> regions;
    for (const auto& [k, v] : rep.region_histogram) regions.insert(k);
    c.require(regions == std::set<std::string>{"0", "1", "2"}, tag + " region set");
    sym = std::max(sym, rep.properties.at("symmetry").max_error);
    end = std::max(end, rep.properties.at("endpoint").max_error);
    cont = std::max(cont, rep.properties.at("continuity").max_error);

    std::mt19937_64 rng(1000 + static_cast<unsigned>(n));
    for (int i = 0; i < 10000; ++i) {
      Point a(n + 1), b(n + 1);
      for (int k = 0; k <= n; ++k) a[k] = standard_normal(rng);
      for (int k = 0; k <= n; ++k) b[k] = standard_normal(rng);
      a = normalized(a);
      b = normalized(b);
      const auto [ap, bp] = antipodalize(a, b);
      anti = std::max({anti, std::abs(ap.dot(bp) + 1.0),
                       std::abs(angular_distance(a, ap) - angular_distance(b, bp))});
    }
  }
  c.require(anti <= 1e-9, "antipodalize error " + fmt(anti));
  const double secs = elapsed(t0);
  c.require(secs < 30.0, "runtime " + fmt(secs) + " s");
  c.note("endpoint " + fmt(end) + ", symmetry " + fmt(sym) + ", antipodal " + fmt(anti) + ", continuity ratio " +
         fmt(cont) + ", " + fmt(secs) + " s");
  return c.done();
}

Outcome torus_suite() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  std::string counts;
  double mid = 0.0, sym = 0.0;
  for (int n : {1, 2, 3}) {
    CheckConfig cfg;
    cfg.pairs = 10000;
    cfg.tol.symmetry = 1e-12;
    const auto rep = check_planner(torus_midpoint_under_test(n), cfg);
    const std::string tag = "T^" + std::to_string(n);
    c.require(rep.properties.at("midpoint").max_error <= 1e-12, tag + " midpoint");
    c.require(rep.properties.at("symmetry").max_error <= 1e-12, tag + " symmetry");
    c.require(rep.distinct_regions() >= 2 * n + 1, tag + " region floor");
    c.require(rep.properties.at("coverage").pass && rep.properties.at("errors").pass, tag + " coverage");
    c.require(rep.pass(), tag + " midpoint planner suite");
    mid = std::max(mid, rep.properties.at("midpoint").max_error);
    sym = std::max(sym, rep.properties.at("symmetry").max_error);
    counts += (counts.empty() ? "" : ",") + std::to_string(rep.distinct_regions()) + ">=" + std::to_string(2 * n + 1);

    const auto prod = check_planner(torus_under_test(n), cfg);
    c.require(prod.pass(), tag + " product planner suite");
    sym = std::max(sym, prod.properties.at("symmetry").max_error);
  }
  const double secs = elapsed(t0);
  c.require(secs < 30.0, "runtime " + fmt(secs) + " s");
  c.note("midpoint " + fmt(mid) + ", symmetry " + fmt(sym) + ", regions " + counts + ", " + fmt(secs) + " s");
  return c.done();
}

Outcome cover_tools_suite() {
  Criterion c;
  std::mt19937_64 rng(77);
  long ties = 0;
  for (int i = 0; i < 100000; ++i) {
    const int k = 1 + static_cast<int>(rng() % 8);
    std::vector<double> v(static_cast<std::size_t>(k));
    if (i % 10 == 0 && k >= 2) {
      // Every value exactly 1/k: the first index must win.
      for (auto& x : v) x = 1.0 / k;
      ++ties;
    } else {
      double s = 0.0;
      for (auto& x : v) s += x = (uniform01(rng) < 0.25 ? 0.0 : uniform01(rng));
      if (s == 0.0) v[0] = s = 1.0;
      for (auto& x : v) x /= s;
    }
    const int idx = disjointify_index({v});
    const bool in_range = idx >= 1 && idx <= k;
    c.require(in_range, "index in range");
    if (!in_range) continue;
    c.require(v[static_cast<std::size_t>(idx - 1)] > 0.0, "index within support");
    c.require(v[static_cast<std::size_t>(idx - 1)] * k >= 1.0 - 1e-12, "chosen value clears 1/k");
    for (int j = 1; j < idx; ++j) c.require(v[static_cast<std::size_t>(j - 1)] * k < 1.0, "smaller index wins ties");
  }

  double lift = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Point a(3), b(3), w(3);
    for (int k = 0; k < 3; ++k) {
      a[k] = standard_normal(rng);
      b[k] = standard_normal(rng);
      w[k] = standard_normal(rng);
    }
    UnorderedPathClass cls(Path::single([a, b, w](double s) -> Point {
      return (1 - s) * a + s * b + s * (1 - s) * w;
    }));
    const auto pa = lift_section(cls, a);
    const auto pb = lift_section(cls, b);
    for (int k = 0; k <= 20; ++k) lift = std::max(lift, (pb(k / 20.0) - pa((20 - k) / 20.0)).norm());
  }
  c.require(lift <= 1e-12, "lift equivariance " + fmt(lift));

  double diag = 0.0, diag_const = 0.0;
  const auto sr = sphere_retraction();
  const auto tr = torus_retraction();
  for (int i = 0; i < 2000; ++i) {
    Point a(3), b(3);
    for (int k = 0; k < 3; ++k) {
      a[k] = standard_normal(rng);
      b[k] = standard_normal(rng);
    }
    a = normalized(a);
    b = normalized(b);
    Point ta(2), tb(2);
    for (int k = 0; k < 2; ++k) {
      ta[k] = kTwoPi * uniform01(rng);
      tb[k] = kTwoPi * uniform01(rng);
    }
    if (sr.in_domain(a, b)) {
      const auto p = diagonal_section(sr, a, b), q = diagonal_section(sr, b, a), d = diagonal_section(sr, a, a);
      for (int k = 0; k <= 100; ++k) {
        diag = std::max(diag, (q(k / 100.0) - p((100 - k) / 100.0)).norm());
        diag_const = std::max(diag_const, (d(k / 100.0) - a).norm());
      }
    }
    if (tr.in_domain(ta, tb)) {
      const auto p = diagonal_section(tr, ta, tb), q = diagonal_section(tr, tb, ta), d = diagonal_section(tr, ta, ta);
      for (int k = 0; k <= 100; ++k) {
        diag = std::max(diag, torus_distance(q(k / 100.0), p((100 - k) / 100.0)));
        diag_const = std::max(diag_const, torus_distance(d(k / 100.0), ta));
      }
    }
  }
  c.require(diag <= 1e-12, "diagonal section symmetry " + fmt(diag));
  c.require(diag_const == 0.0, "diagonal constancy " + fmt(diag_const));
  c.note("1e5 partitions (" + std::to_string(ties) + " exact ties), lift error " + fmt(lift) + ", diagonal symmetry " +
         fmt(diag));
  return c.done();
}

Outcome mutation_sensitivity() {
  Criterion c;
  CheckConfig cfg;
  cfg.pairs = 5000;
  auto sphere = sphere_under_test(2);
  const auto scfg = SphereConfig::standard(2);
  sphere.plan = [scfg](const Point& a, const Point& b) { return mutants::flipped_arc_sphere_plan(scfg, a, b); };
  const double s_err = check_planner(sphere, cfg).properties.at("symmetry").max_error;
  c.require(s_err > 1e-3, "flipped fixed arc symmetry error " + fmt(s_err));

  auto torus = torus_midpoint_under_test(2);
  const auto tcfg = TorusMidpointConfig::standard(2);
  torus.plan = [tcfg](const Point& a, const Point& b) { return mutants::unreversed_midpoint_plan(tcfg, a, b); };
  const double t_err = check_planner(torus, cfg).properties.at("symmetry").max_error;
  c.require(t_err > 1e-3, "unreversed first leg symmetry error " + fmt(t_err));
  c.note("symmetry errors " + fmt(s_err) + " and " + fmt(t_err));
  return c.done();
}

Outcome headline_brackets() {
  Criterion c;
  for (int n = 1; n <= 5; ++n) {
    const auto r = bound_report("S^" + std::to_string(n));
    c.require(r.tcs.lower.value == r.tcs.upper.value && r.tcs.lower.value == 3, "TC^S(S^" + std::to_string(n) + ")");
  }
  for (int n = 1; n <= 4; ++n) {
    const auto r = bound_report("T^" + std::to_string(n));
    c.require(r.tcs_sigma.lower.value == r.tcs_sigma.upper.value, "TC^S_sigma(T^" + std::to_string(n) + ")");
  }
  for (int g = 1; g <= 3; ++g) {
    const auto r = bound_report("Sigma_" + std::to_string(g));
    c.require(r.tcs_sigma.lower.value == 5 && r.tcs_sigma.upper.value == 5, "TC^S_sigma(Sigma_" + std::to_string(g) + ")");
  }
  c.note("closed brackets for TC^S(S^n), TC^S_sigma(T^n), TC^S_sigma(Sigma_g); cover optimality is covered by 4-7");
  return c.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 bound table reproduction", bound_table_reproduction},
      {"2 algebra oracle equivalence", oracle_equivalence},
      {"3 structural algebra invariants", structural_invariants},
      {"4 sphere planner suite", sphere_suite},
      {"5 torus planners", torus_suite},
      {"6 cover tools", cover_tools_suite},
      {"7 mutation sensitivity", mutation_sensitivity},
      {"8 headline equalities as closed brackets", headline_brackets},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %-42s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
