#include "tc_atlas/spaces.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <functional>

#include "tc_atlas/errors.hpp"

namespace tc_atlas {

namespace {

constexpr int kMaxParameter = 1024;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_parameter(std::string_view digits, std::string_view factor) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed space factor '" + std::string(factor) + "'");
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || value > kMaxParameter)
    throw ParseError("parameter out of range in '" + std::string(factor) + "'");
  if (value < 1) throw ParseError("parameter must be positive in '" + std::string(factor) + "'");
  return value;
}

SpaceFactor parse_factor(std::string_view text) {
  const auto f = trim(text);
  if (f.empty()) throw ParseError("empty factor in space spec");
  if (f == "point") return {SpaceFamily::Point, 0};
  auto starts = [&](std::string_view p) { return f.substr(0, p.size()) == p; };
  if (starts("RP^")) return {SpaceFamily::ProjectiveSpace, parse_parameter(f.substr(3), f)};
  if (starts("S^")) return {SpaceFamily::Sphere, parse_parameter(f.substr(2), f)};
  if (starts("T^")) return {SpaceFamily::Torus, parse_parameter(f.substr(2), f)};
  if (starts("Sigma_")) return {SpaceFamily::Surface, parse_parameter(f.substr(6), f)};
  throw ParseError("unknown space factor '" + std::string(f) + "'");
}

int factor_dim(const SpaceFactor& f) {
  switch (f.family) {
    case SpaceFamily::Sphere:
    case SpaceFamily::Torus:
    case SpaceFamily::ProjectiveSpace: return f.parameter;
    case SpaceFamily::Surface: return 2;
    case SpaceFamily::Point: return 0;
  }
  return 0;
}

bool factor_aspherical(const SpaceFactor& f) {
  switch (f.family) {
    case SpaceFamily::Sphere:
    case SpaceFamily::ProjectiveSpace: return f.parameter == 1;
    case SpaceFamily::Torus:
    case SpaceFamily::Surface:
    case SpaceFamily::Point: return true;
  }
  return false;
}

PublishedValues factor_published(const SpaceFactor& f) {
  PublishedValues p;
  const int n = f.parameter;
  switch (f.family) {
    case SpaceFamily::Point:
      p.tc = PublishedValue{1, "contractible space: TC = 1"};
      p.tcs = PublishedValue{1, "single point: TC^S = 1"};
      p.tcs_sigma = PublishedValue{1, "single point: empty configuration space, genus 0"};
      break;
    case SpaceFamily::Sphere:
      p.tc = n % 2 == 1 ? PublishedValue{2, "TC(S^n) = 2 for odd n"}
                        : PublishedValue{3, "TC(S^n) = 3 for even n"};
      p.tcs = PublishedValue{3, "TC^S(S^n) = 3"};
      if (n == 1) p.tcs_sigma = PublishedValue{3, "TC^S_sigma(T^n) = 2n + 1 at n = 1"};
      break;
    case SpaceFamily::Torus:
      p.tc = PublishedValue{n + 1, "TC(T^n) = n + 1"};
      if (n == 1) p.tcs = PublishedValue{3, "TC^S(S^n) = 3 at n = 1"};
      p.tcs_sigma = PublishedValue{2 * n + 1, "TC^S_sigma(T^n) = 2n + 1"};
      break;
    case SpaceFamily::Surface:
      p.tc = n == 1 ? PublishedValue{3, "TC(T^2) = 3"}
                    : PublishedValue{5, "TC(Sigma_g) = 5 for g >= 2"};
      p.tcs_sigma = PublishedValue{5, "TC^S_sigma(Sigma_g) = 5"};
      break;
    case SpaceFamily::ProjectiveSpace: break;
  }
  return p;
}

GradedF2Algebra sphere_cohomology(int n) {
  return GradedF2Algebra(n, {{"1", 0}, {"a", n}}, {{0, 0, {0}}, {0, 1, {1}}, {1, 0, {1}}});
}

GradedF2Algebra projective_cohomology(int n) {
  std::vector<BasisElement> basis;
  for (int k = 0; k <= n; ++k)
    basis.push_back({k == 0 ? "1" : k == 1 ? "a" : "a^" + std::to_string(k), k});
  std::vector<ProductEntry> products;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      products.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                          {static_cast<std::size_t>(i + j)}});
  return GradedF2Algebra(n, std::move(basis), products);
}

// Exterior algebra on n degree-1 generators; basis = subsets ordered by
// (size, lexicographic).
GradedF2Algebra torus_cohomology(int n) {
  std::vector<unsigned> subsets;
  for (unsigned m = 0; m < (1u << n); ++m) subsets.push_back(m);
  std::stable_sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // Lexicographic on the sorted index lists.
    for (int i = 0; i < 32; ++i) {
      const bool ia = a >> i & 1u, ib = b >> i & 1u;
      if (ia != ib) return ia;
    }
    return false;
  });
  std::vector<std::size_t> index_of(subsets.size());
  std::vector<BasisElement> basis;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    index_of[subsets[k]] = k;
    std::string label;
    for (int i = 0; i < n; ++i)
      if (subsets[k] >> i & 1u) label += "a" + std::to_string(i + 1);
    basis.push_back({label.empty() ? "1" : label, std::popcount(subsets[k])});
  }
  std::vector<ProductEntry> products;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      if ((subsets[i] & subsets[j]) == 0) products.push_back({i, j, {index_of[subsets[i] | subsets[j]]}});
  return GradedF2Algebra(n, std::move(basis), products);
}

// Basis 1, a_1..a_g, b_1..b_g, w with a_i b_i = b_i a_i = w.
GradedF2Algebra surface_cohomology(int g) {
  const std::size_t gg = static_cast<std::size_t>(g);
  std::vector<BasisElement> basis{{"1", 0}};
  for (int i = 1; i <= g; ++i) basis.push_back({"a" + std::to_string(i), 1});
  for (int i = 1; i <= g; ++i) basis.push_back({"b" + std::to_string(i), 1});
  basis.push_back({"w", 2});
  const std::size_t top = basis.size() - 1;
  std::vector<ProductEntry> products;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    products.push_back({0, j, {j}});
    if (j != 0) products.push_back({j, 0, {j}});
  }
  for (std::size_t i = 1; i <= gg; ++i) {
    products.push_back({i, i + gg, {top}});
    products.push_back({i + gg, i, {top}});
  }
  return GradedF2Algebra(2, std::move(basis), products);
}

std::size_t factor_basis_size(const SpaceFactor& f) {
  switch (f.family) {
    case SpaceFamily::Sphere: return 2;
    case SpaceFamily::ProjectiveSpace: return static_cast<std::size_t>(f.parameter) + 1;
    case SpaceFamily::Torus: return f.parameter >= 16 ? kMaxCohomologyBasis + 1 : std::size_t{1} << f.parameter;
    case SpaceFamily::Surface: return 2 * static_cast<std::size_t>(f.parameter) + 2;
    case SpaceFamily::Point: return 1;
  }
  return 1;
}

GradedF2Algebra factor_cohomology(const SpaceFactor& f) {
  switch (f.family) {
    case SpaceFamily::Sphere: return sphere_cohomology(f.parameter);
    case SpaceFamily::ProjectiveSpace: return projective_cohomology(f.parameter);
    case SpaceFamily::Torus: return torus_cohomology(f.parameter);
    case SpaceFamily::Surface: return surface_cohomology(f.parameter);
    case SpaceFamily::Point: break;
  }
  return GradedF2Algebra(0, {{"1", 0}}, {{0, 0, {0}}});
}

RenderedCertificate render_square_certificate(const CohomologyInvariants& inv, const CupLengthCertificate& c) {
  return render_certificate(inv.square, c);
}

}  // namespace

std::string SpaceFactor::name() const {
  const auto p = std::to_string(parameter);
  switch (family) {
    case SpaceFamily::Sphere: return "S^" + p;
    case SpaceFamily::Torus: return "T^" + p;
    case SpaceFamily::Surface: return "Sigma_" + p;
    case SpaceFamily::ProjectiveSpace: return "RP^" + p;
    case SpaceFamily::Point: return "point";
  }
  return "point";
}

SpaceDescriptor parse_space(std::string_view spec) {
  SpaceDescriptor s;
  std::size_t start = 0;
  while (true) {
    const auto pos = spec.find('x', start);
    s.factors.push_back(parse_factor(spec.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  s.is_closed_manifold = true;
  s.is_aspherical = true;
  s.is_single_point = true;
  for (const auto& f : s.factors) {
    if (!s.name.empty()) s.name += " x ";
    s.name += f.name();
    s.dim += factor_dim(f);
    s.is_aspherical = s.is_aspherical && factor_aspherical(f);
    s.is_single_point = s.is_single_point && f.family == SpaceFamily::Point;
  }
  if (s.factors.size() == 1) s.published = factor_published(s.factors.front());
  return s;
}

GradedF2Algebra build_cohomology(const SpaceDescriptor& s) {
  std::size_t size = 1;
  for (const auto& f : s.factors) {
    size *= factor_basis_size(f);
    if (size > kMaxCohomologyBasis)
      throw DomainError("cohomology of " + s.name + " exceeds " + std::to_string(kMaxCohomologyBasis) +
                        " basis elements");
  }
  GradedF2Algebra h = factor_cohomology(s.factors.front());
  for (std::size_t i = 1; i < s.factors.size(); ++i) h = tensor_product(h, factor_cohomology(s.factors[i]));
  return h;
}

RenderedCertificate render_certificate(const GradedF2Algebra& a, const CupLengthCertificate& c) {
  RenderedCertificate r;
  r.length = c.length;
  for (const auto& w : c.witnesses) r.witnesses.push_back(format_element(a, w));
  r.product = format_element(a, c.product);
  return r;
}

CohomologyInvariants compute_invariants(const SpaceDescriptor& s) {
  GradedF2Algebra h = build_cohomology(s);
  GradedF2Algebra sq = tensor_square(h);
  F2Subspace zd = diagonal_kernel(sq);
  F2Subspace nm = norm_subspace(sq);
  auto cl = cup_length(h, positive_part(h));
  auto zdcl = cup_length(sq, zd);
  auto ncl = cup_length(sq, nm);
  return {std::move(h), std::move(sq), std::move(zd), std::move(nm), std::move(cl), std::move(zdcl),
          std::move(ncl)};
}

InvariantBounds tc_bounds(const SpaceDescriptor& s, const CohomologyInvariants& inv) {
  InvariantBounds b;
  b.lower = {inv.zdcl.length + 1, "zero-divisor cup-length + 1 (mod 2)", render_square_certificate(inv, inv.zdcl)};
  if (s.published.tc)
    b.upper = {s.published.tc->value, "published: " + s.published.tc->citation, std::nullopt};
  else
    b.upper = {2 * s.dim + 1, "catalog annotation: 2 dim + 1 (standard background)", std::nullopt};
  return b;
}

InvariantBounds tcs_bounds(const SpaceDescriptor& s, const CohomologyInvariants& inv) {
  InvariantBounds b;
  if (s.is_single_point) {
    b.lower = {1, "single point", std::nullopt};
    b.upper = {1, "single point", std::nullopt};
    return b;
  }
  if (s.is_closed_manifold && inv.ncl.length + 2 >= 2)
    b.lower = {inv.ncl.length + 2, "norm cup-length + 2 (closed manifold)", render_square_certificate(inv, inv.ncl)};
  else
    b.lower = {2, "not a single point", std::nullopt};

  if (s.is_closed_manifold)
    b.upper = {2 * s.dim + 1, "dimension: 2 dim + 1 (closed manifold)", std::nullopt};
  else
    b.upper = {2 * s.dim + 2, "dimension: 2 dim + 2", std::nullopt};
  if (s.factors.size() == 1 && s.factors.front().family == SpaceFamily::Sphere && b.upper.value > 3)
    b.upper = {3, "two-region sphere planner", std::nullopt};
  return b;
}

InvariantBounds tcs_sigma_bounds(const SpaceDescriptor& s, const CohomologyInvariants& inv) {
  InvariantBounds b;
  if (s.is_single_point) {
    b.lower = {1, "single point", std::nullopt};
    b.upper = {1, "single point", std::nullopt};
    return b;
  }
  const Bound tcs_lower = tcs_bounds(s, inv).lower;
  b.lower = {tcs_lower.value, "TC^S lower bound", tcs_lower.certificate};
  if (s.is_closed_manifold && s.is_aspherical) {
    const int v = 2 * inv.cl.length + 1;
    if (v >= b.lower.value)
      b.lower = {v, "2 cl + 1 (closed aspherical manifold)", render_certificate(inv.algebra, inv.cl)};
  }
  if (s.is_closed_manifold)
    b.upper = {2 * s.dim + 1, "dimension: 2 dim + 1 (closed manifold)", std::nullopt};
  else
    b.upper = {2 * s.dim + 2, "dimension: 2 dim + 2", std::nullopt};
  return b;
}

InvariantBounds tc_bounds(const SpaceDescriptor& s) { return tc_bounds(s, compute_invariants(s)); }
InvariantBounds tcs_bounds(const SpaceDescriptor& s) { return tcs_bounds(s, compute_invariants(s)); }
InvariantBounds tcs_sigma_bounds(const SpaceDescriptor& s) {
  return tcs_sigma_bounds(s, compute_invariants(s));
}

BoundReport bound_report(const SpaceDescriptor& s) {
  const auto inv = compute_invariants(s);
  BoundReport r;
  r.space = s;
  r.tc = tc_bounds(s, inv);
  r.tcs = tcs_bounds(s, inv);
  r.tcs_sigma = tcs_sigma_bounds(s, inv);
  r.cl = inv.cl.length;
  r.zdcl = inv.zdcl.length;
  r.ncl = inv.ncl.length;

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) r.issues.push_back(what);
  };
  const std::pair<const char*, const InvariantBounds*> rows[] = {
      {"TC", &r.tc}, {"TCS", &r.tcs}, {"TCS_SIGMA", &r.tcs_sigma}};
  for (const auto& [name, b] : rows)
    check(b->lower.value <= b->upper.value, std::string(name) + ": lower exceeds upper");
  check(r.tc.lower.value <= r.tcs.upper.value, "TC lower exceeds TCS upper");
  check(r.tcs.lower.value <= r.tcs_sigma.upper.value, "TCS lower exceeds TCS_SIGMA upper");

  const auto& p = s.published;
  const std::pair<const std::optional<PublishedValue>*, const InvariantBounds*> pub[] = {
      {&p.tc, &r.tc}, {&p.tcs, &r.tcs}, {&p.tcs_sigma, &r.tcs_sigma}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [value, b] = pub[i];
    if (*value)
      check(b->lower.value <= (*value)->value && (*value)->value <= b->upper.value,
            std::string(rows[i].first) + ": published value outside computed bracket");
  }
  if (p.tc && p.tcs) check(p.tc->value <= p.tcs->value, "published TC exceeds published TCS");
  if (p.tcs && p.tcs_sigma) check(p.tcs->value <= p.tcs_sigma->value, "published TCS exceeds published TCS_SIGMA");
  if (p.tc && p.tcs_sigma) check(p.tc->value <= p.tcs_sigma->value, "published TC exceeds published TCS_SIGMA");
  if (s.is_closed_manifold && !s.is_single_point)
    check(r.ncl + 2 <= 2 * s.dim + 1, "norm cup-length bound exceeds 2 dim + 1");
  return r;
}

BoundReport bound_report(std::string_view spec) { return bound_report(parse_space(spec)); }

std::vector<BoundReport> bound_table(const std::vector<std::string>& specs) {
  std::vector<BoundReport> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) out.push_back(bound_report(spec));
  return out;
}

std::vector<std::string> default_suite() {
  std::vector<std::string> out;
  for (int n = 1; n <= 5; ++n) out.push_back("S^" + std::to_string(n));
  for (int n = 1; n <= 4; ++n) out.push_back("T^" + std::to_string(n));
  for (int g = 1; g <= 3; ++g) out.push_back("Sigma_" + std::to_string(g));
  for (int n = 2; n <= 4; ++n) out.push_back("RP^" + std::to_string(n));
  return out;
}

}  // namespace tc_atlas
