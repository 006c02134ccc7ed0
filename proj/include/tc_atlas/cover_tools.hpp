#pragma once

// Cover and section utilities: choosing one set from partition-of-unity
// values, orienting unordered path classes, and sections near the diagonal.

#include <functional>
#include <vector>

#include "tc_atlas/path.hpp"

namespace tc_atlas {

/// Values f_1..f_k of a partition of unity at one point.
struct PartitionValues {
  std::vector<double> values;

  /// Throws DomainError for negative entries, an empty list, or a sum off 1 by
  /// more than 1e-9.
  void validate() const;
};

/// Smallest 1-based i with f_i >= 1/k. The comparison is done as k f_i >= sum
/// so rounding in the sum cannot leave every value below the bar.
int disjointify_index(const PartitionValues& pv);

/// A path up to reversal, stored through one representative.
class UnorderedPathClass {
 public:
  /// Throws DomainError when the endpoints coincide within `tolerance`.
  explicit UnorderedPathClass(Path representative, double tolerance = 1e-9);

  const Path& representative() const { return rep_; }
  double tolerance() const { return tol_; }

 private:
  Path rep_;
  double tol_;
};

/// The representative oriented to start at `a`. Throws DomainError if `a` is
/// neither endpoint.
Path lift_section(const UnorderedPathClass& cls, const Point& a);

/// Embedding of a space into R^N with a retraction defined near its image.
struct DiagonalRetraction {
  std::function<Point(const Point&)> embed;
  std::function<Point(const Point&)> retract;
  /// True when the chord from embed(A) to embed(B) stays in the retraction domain.
  std::function<bool(const Point&, const Point&)> in_domain;
};

/// t -> r((1 - t) e(A) + t e(B)); constant at A when A = B.
Path diagonal_section(const DiagonalRetraction& r, const Point& a, const Point& b);

/// Sphere in R^{n+1}: identity embedding, radial normalization, domain <A, B> > -1 + 1e-6.
DiagonalRetraction sphere_retraction();

/// Torus as angles: embedding into (R^2)^n, per-coordinate angle of the chord
/// point, domain every coordinate pair at least 1e-6 from antipodal.
DiagonalRetraction torus_retraction();

}  // namespace tc_atlas
