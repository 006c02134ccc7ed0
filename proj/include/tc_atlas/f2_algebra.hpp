#pragma once

// Finite-dimensional graded-commutative algebras over GF(2) given by
// structure constants, their tensor squares, the zero-divisor ideal, the norm
// subring, and cup-lengths of graded subspaces with witness certificates.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tc_atlas/bit_vector.hpp"

namespace tc_atlas {

/// An element of an algebra: coefficient bit per basis index.
using F2Element = BitVector;

struct BasisElement {
  std::string label;
  int degree = 0;
};

/// One nonzero entry of a multiplication table: e_left * e_right = sum of e_k.
struct ProductEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::size_t> terms;
};

class GradedF2Algebra {
 public:
  /// Pairs absent from `products` multiply to zero. Throws DomainError when a
  /// degree is out of range, a product term has the wrong degree, a pair is
  /// listed twice, or no degree-0 basis element acts as a two-sided unit.
  GradedF2Algebra(int top_degree, std::vector<BasisElement> basis,
                  const std::vector<ProductEntry>& products);

  std::size_t dimension() const { return basis_.size(); }
  int top_degree() const { return top_degree_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::size_t unit_index() const { return unit_index_; }

  /// Basis indices appearing in e_i * e_j.
  std::span<const std::uint32_t> product_terms(std::size_t i, std::size_t j) const;

  /// Nonzero table entries in (left, right) order.
  std::vector<ProductEntry> nonzero_products() const;

  F2Element zero() const { return F2Element(dimension()); }
  F2Element basis_element(std::size_t i) const;
  F2Element unit() const { return basis_element(unit_index_); }

  /// Bilinear product. Throws DomainError on a length mismatch.
  F2Element mul(const F2Element& x, const F2Element& y) const;

  /// Non-null iff this algebra was produced by tensor_square(); points at
  /// the factor A of A (x) A.
  const GradedF2Algebra* square_factor() const { return square_factor_.get(); }

 private:
  friend GradedF2Algebra tensor_square(const GradedF2Algebra& a);

  int top_degree_ = 0;
  std::vector<BasisElement> basis_;
  std::size_t unit_index_ = 0;
  // CSR layout: terms of e_i * e_j live in terms_[offsets_[i*n+j] .. offsets_[i*n+j+1]).
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> terms_;
  std::shared_ptr<const GradedF2Algebra> square_factor_;
};

/// Result of the exhaustive structure checks.
struct AxiomReport {
  bool unit = true;
  bool associative = true;
  bool commutative = true;
  bool graded = true;
  std::string first_failure;

  bool ok() const { return unit && associative && commutative && graded; }
};

/// Checks the unit law on every basis element, commutativity on every basis
/// pair, associativity on every basis triple and degree-correctness of every
/// table entry.
AxiomReport check_axioms(const GradedF2Algebra& a);

/// A (x) B with basis index i * dim(B) + j, label "x|y", and the untwisted
/// product (x|y)(x'|y') = xx'|yy' (signs vanish mod 2).
GradedF2Algebra tensor_product(const GradedF2Algebra& a, const GradedF2Algebra& b);

/// tensor_product(a, a), remembering `a` as the square factor.
GradedF2Algebra tensor_square(const GradedF2Algebra& a);

/// Splits x into its homogeneous components, ordered by degree; zero
/// components are omitted.
std::vector<F2Element> homogeneous_components(const GradedF2Algebra& a, const F2Element& x);

/// Degree of a nonzero homogeneous element, nullopt otherwise.
std::optional<int> element_degree(const GradedF2Algebra& a, const F2Element& x);

/// Human-readable sum of basis labels, "0" for the zero element.
std::string format_element(const GradedF2Algebra& a, const F2Element& x);

/// Incremental row echelon form over GF(2). Each stored row has a distinct
/// pivot (its lowest set bit).
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width), pivot_row_(width, -1) {}

  /// Reduces v against the stored rows; the result is zero iff v is in the span.
  F2Element reduce(F2Element v) const;
  bool contains(const F2Element& v) const { return reduce(v).none(); }
  /// Adds v if it is independent of the stored rows; returns whether it was added.
  bool insert(const F2Element& v);

  std::size_t rank() const { return rows_.size(); }
  const std::vector<F2Element>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::vector<F2Element> rows_;
  std::vector<int> pivot_row_;
};

/// A subspace of an algebra in canonical reduced row echelon form: pivots are
/// lowest set bits, each pivot column has a single 1, and rows are ordered by
/// (degree of pivot, pivot). Equal subspaces have identical row matrices.
class F2Subspace {
 public:
  static F2Subspace span(const GradedF2Algebra& a, const std::vector<F2Element>& generators);

  std::size_t ambient_dimension() const { return ambient_dimension_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<F2Element>& rows() const { return rows_; }

  bool contains(const F2Element& v) const;
  bool contains(const F2Subspace& other) const;

  friend bool operator==(const F2Subspace&, const F2Subspace&) = default;

 private:
  std::size_t ambient_dimension_ = 0;
  std::vector<F2Element> rows_;
};

/// Span of all basis elements of positive degree.
F2Subspace positive_part(const GradedF2Algebra& a);

/// Kernel of the multiplication map A (x) A -> A, computed degreewise: the
/// ideal of zero-divisors. Throws DomainError unless t came from tensor_square.
F2Subspace diagonal_kernel(const GradedF2Algebra& t);

/// Span of the norm elements x|y + y|x over basis pairs x != y.
F2Subspace norm_subspace(const GradedF2Algebra& t);

struct CupLengthCertificate {
  int length = 0;
  std::vector<F2Element> witnesses;
  /// Ordered product of the witnesses; the unit when length is 0.
  F2Element product;
};

/// Largest k such that some product of k positive-degree elements of s is
/// nonzero, with one such product as a witness. Rows of s are split into
/// homogeneous components first.
CupLengthCertificate cup_length(const GradedF2Algebra& a, const F2Subspace& s);

/// Recomputes the witness product and checks that every witness is a nonzero
/// homogeneous positive-degree element of the graded hull of s.
bool verify_certificate(const GradedF2Algebra& a, const CupLengthCertificate& cert,
                        const F2Subspace& s);

}  // namespace tc_atlas
