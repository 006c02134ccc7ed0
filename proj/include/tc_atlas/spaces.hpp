#pragma once

// Built-in spaces, their mod-2 cohomology, and bound assembly for TC, TC^S and
// TC^S with constant midpoint map.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tc_atlas/f2_algebra.hpp"

namespace tc_atlas {

enum class SpaceFamily { Sphere, Torus, Surface, ProjectiveSpace, Point };

struct SpaceFactor {
  SpaceFamily family = SpaceFamily::Point;
  int parameter = 0;

  std::string name() const;
};

struct PublishedValue {
  int value = 0;
  std::string citation;
};

struct PublishedValues {
  std::optional<PublishedValue> tc;
  std::optional<PublishedValue> tcs;
  std::optional<PublishedValue> tcs_sigma;
};

struct SpaceDescriptor {
  std::string name;  // canonical: factor names joined by " x "
  std::vector<SpaceFactor> factors;
  int dim = 0;
  bool is_closed_manifold = false;
  bool is_aspherical = false;
  bool is_single_point = false;
  PublishedValues published;
};

/// Grammar: "S^n" | "T^n" | "Sigma_g" | "RP^n" | "point" | "A x B" (n, g >= 1).
/// Whitespace around "x" and at either end is ignored. Throws ParseError.
SpaceDescriptor parse_space(std::string_view spec);

/// Largest cohomology basis build_cohomology accepts; the tensor square has
/// the square of this many basis elements.
inline constexpr std::size_t kMaxCohomologyBasis = 32;

/// H*(X; Z/2) for a catalog space. Throws DomainError above kMaxCohomologyBasis.
GradedF2Algebra build_cohomology(const SpaceDescriptor& s);

/// Witness certificate rendered with basis labels.
struct RenderedCertificate {
  int length = 0;
  std::vector<std::string> witnesses;
  std::string product;
};

RenderedCertificate render_certificate(const GradedF2Algebra& a, const CupLengthCertificate& c);

struct Bound {
  int value = 0;
  std::string method;
  std::optional<RenderedCertificate> certificate;
};

struct InvariantBounds {
  Bound lower;
  Bound upper;
};

/// H*(X), H*(X) (x) H*(X), the zero-divisor ideal I, the norm subring N, and
/// the three cup-lengths cl(X), cl(I), cl(N).
struct CohomologyInvariants {
  GradedF2Algebra algebra;
  GradedF2Algebra square;
  F2Subspace zero_divisors;
  F2Subspace norms;
  CupLengthCertificate cl;
  CupLengthCertificate zdcl;
  CupLengthCertificate ncl;
};

CohomologyInvariants compute_invariants(const SpaceDescriptor& s);

/// Lower bound zdcl + 1; upper bound is the published value or the general
/// 2 dim + 1, tagged as a catalog annotation.
InvariantBounds tc_bounds(const SpaceDescriptor& s, const CohomologyInvariants& inv);
/// Lower bound ncl + 2 on closed manifolds; upper bound from dimension, and
/// 3 for spheres.
InvariantBounds tcs_bounds(const SpaceDescriptor& s, const CohomologyInvariants& inv);
/// Lower bound 2 cl + 1 on closed aspherical manifolds, never below the TC^S
/// lower bound; upper bound from dimension.
InvariantBounds tcs_sigma_bounds(const SpaceDescriptor& s, const CohomologyInvariants& inv);

InvariantBounds tc_bounds(const SpaceDescriptor& s);
InvariantBounds tcs_bounds(const SpaceDescriptor& s);
InvariantBounds tcs_sigma_bounds(const SpaceDescriptor& s);

struct BoundReport {
  SpaceDescriptor space;
  InvariantBounds tc;
  InvariantBounds tcs;
  InvariantBounds tcs_sigma;
  int cl = 0;
  int zdcl = 0;
  int ncl = 0;
  /// Violated consistency checks; empty for a healthy report.
  std::vector<std::string> issues;

  bool consistent() const { return issues.empty(); }
};

BoundReport bound_report(const SpaceDescriptor& s);
BoundReport bound_report(std::string_view spec);

/// One report per spec, in order. Parse and domain errors propagate.
std::vector<BoundReport> bound_table(const std::vector<std::string>& specs);

/// S^1..S^5, T^1..T^4, Sigma_1..Sigma_3, RP^2..RP^4.
std::vector<std::string> default_suite();

}  // namespace tc_atlas
