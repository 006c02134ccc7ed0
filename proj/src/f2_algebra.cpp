#include "tc_atlas/f2_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tc_atlas/errors.hpp"

namespace tc_atlas {

GradedF2Algebra::GradedF2Algebra(int top_degree, std::vector<BasisElement> basis,
                                 const std::vector<ProductEntry>& products)
    : top_degree_(top_degree), basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  if (top_degree_ < 0) throw DomainError("top_degree must be nonnegative");
  if (n == 0) throw DomainError("algebra basis is empty");
  for (const auto& b : basis_) {
    if (b.degree < 0 || b.degree > top_degree_)
      throw DomainError("basis element '" + b.label + "' has degree outside [0, top_degree]");
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> table;
  for (const auto& e : products) {
    if (e.left >= n || e.right >= n) throw DomainError("product entry index out of range");
    if (e.terms.empty()) continue;
    if (!table.emplace(std::pair{e.left, e.right}, e.terms).second)
      throw DomainError("product entry listed twice");
    const int d = basis_[e.left].degree + basis_[e.right].degree;
    if (d > top_degree_) throw DomainError("nonzero product above top_degree");
    std::vector<std::size_t> sorted = e.terms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("repeated term in product entry");
    for (auto k : sorted) {
      if (k >= n) throw DomainError("product term index out of range");
      if (basis_[k].degree != d) throw DomainError("product term has the wrong degree");
    }
  }

  offsets_.assign(n * n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = table.find({i, j});
      if (it != table.end())
        for (auto k : it->second) terms_.push_back(static_cast<std::uint32_t>(k));
      offsets_[i * n + j + 1] = static_cast<std::uint32_t>(terms_.size());
    }
  }

  bool found = false;
  for (std::size_t u = 0; u < n && !found; ++u) {
    if (basis_[u].degree != 0) continue;
    bool is_unit = true;
    for (std::size_t j = 0; j < n && is_unit; ++j) {
      auto l = product_terms(u, j);
      auto r = product_terms(j, u);
      is_unit = l.size() == 1 && l[0] == j && r.size() == 1 && r[0] == j;
    }
    if (is_unit) {
      unit_index_ = u;
      found = true;
    }
  }
  if (!found) throw DomainError("no degree-0 basis element acts as a unit");
}

std::span<const std::uint32_t> GradedF2Algebra::product_terms(std::size_t i, std::size_t j) const {
  const std::size_t n = basis_.size();
  const std::size_t cell = i * n + j;
  return {terms_.data() + offsets_[cell], offsets_[cell + 1] - offsets_[cell]};
}

std::vector<ProductEntry> GradedF2Algebra::nonzero_products() const {
  std::vector<ProductEntry> out;
  const std::size_t n = basis_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto t = product_terms(i, j);
      if (t.empty()) continue;
      out.push_back({i, j, std::vector<std::size_t>(t.begin(), t.end())});
    }
  }
  return out;
}

F2Element GradedF2Algebra::basis_element(std::size_t i) const {
  if (i >= dimension()) throw DomainError("basis index out of range");
  return F2Element::unit(dimension(), i);
}

F2Element GradedF2Algebra::mul(const F2Element& x, const F2Element& y) const {
  if (x.size() != dimension() || y.size() != dimension())
    throw DomainError("element length does not match the algebra dimension");
  F2Element out(dimension());
  x.for_each_set([&](std::size_t i) {
    y.for_each_set([&](std::size_t j) {
      for (auto k : product_terms(i, j)) out.flip(k);
    });
  });
  return out;
}

AxiomReport check_axioms(const GradedF2Algebra& a) {
  AxiomReport report;
  const std::size_t n = a.dimension();
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && report.first_failure.empty()) report.first_failure = what;
    flag = false;
  };

  const auto u = a.unit_index();
  if (a.degree(u) != 0) fail(report.unit, "unit has positive degree");
  for (std::size_t i = 0; i < n; ++i) {
    auto e = a.basis_element(i);
    if (a.mul(a.unit(), e) != e || a.mul(e, a.unit()) != e)
      fail(report.unit, "unit law fails on " + a.label(i));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int d = a.degree(i) + a.degree(j);
      for (auto k : a.product_terms(i, j))
        if (a.degree(k) != d) fail(report.graded, "degree mismatch in " + a.label(i) + "*" + a.label(j));
      if (d > a.top_degree() && !a.product_terms(i, j).empty())
        fail(report.graded, "nonzero product above top degree");
      if (j > i) {
        auto l = a.mul(a.basis_element(i), a.basis_element(j));
        auto r = a.mul(a.basis_element(j), a.basis_element(i));
        if (l != r) fail(report.commutative, a.label(i) + " and " + a.label(j) + " do not commute");
      }
    }
  }

  // (e_i e_j) e_k versus e_i (e_j e_k), expanded through the sparse table.
  std::vector<F2Element> right(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      F2Element v(n);
      for (auto t : a.product_terms(j, k)) v.flip(t);
      right[j * n + k] = std::move(v);
    }
  for (std::size_t i = 0; i < n && report.associative; ++i) {
    for (std::size_t j = 0; j < n && report.associative; ++j) {
      auto ij = a.product_terms(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        F2Element lhs(n);
        for (auto m : ij)
          for (auto t : a.product_terms(m, k)) lhs.flip(t);
        F2Element rhs(n);
        right[j * n + k].for_each_set([&](std::size_t m) {
          for (auto t : a.product_terms(i, m)) rhs.flip(t);
        });
        if (lhs != rhs) {
          fail(report.associative,
               "associativity fails on " + a.label(i) + "," + a.label(j) + "," + a.label(k));
          break;
        }
      }
    }
  }
  return report;
}

GradedF2Algebra tensor_product(const GradedF2Algebra& a, const GradedF2Algebra& b) {
  const std::size_t na = a.dimension();
  const std::size_t nb = b.dimension();
  std::vector<BasisElement> basis;
  basis.reserve(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      basis.push_back({a.label(i) + "|" + b.label(j), a.degree(i) + b.degree(j)});

  std::vector<ProductEntry> products;
  const auto pa = a.nonzero_products();
  const auto pb = b.nonzero_products();
  for (const auto& ea : pa) {
    for (const auto& eb : pb) {
      ProductEntry e;
      e.left = ea.left * nb + eb.left;
      e.right = ea.right * nb + eb.right;
      for (auto x : ea.terms)
        for (auto y : eb.terms) e.terms.push_back(x * nb + y);
      products.push_back(std::move(e));
    }
  }
  return GradedF2Algebra(a.top_degree() + b.top_degree(), std::move(basis), products);
}

GradedF2Algebra tensor_square(const GradedF2Algebra& a) {
  GradedF2Algebra t = tensor_product(a, a);
  t.square_factor_ = std::make_shared<const GradedF2Algebra>(a);
  return t;
}

std::vector<F2Element> homogeneous_components(const GradedF2Algebra& a, const F2Element& x) {
  if (x.size() != a.dimension()) throw DomainError("element length does not match the algebra dimension");
  std::map<int, F2Element> parts;
  x.for_each_set([&](std::size_t i) {
    auto [it, inserted] = parts.try_emplace(a.degree(i), a.dimension());
    it->second.set(i);
  });
  std::vector<F2Element> out;
  for (auto& [d, v] : parts) out.push_back(std::move(v));
  return out;
}

std::optional<int> element_degree(const GradedF2Algebra& a, const F2Element& x) {
  std::optional<int> d;
  bool mixed = false;
  x.for_each_set([&](std::size_t i) {
    if (!d) d = a.degree(i);
    else if (*d != a.degree(i)) mixed = true;
  });
  if (mixed) return std::nullopt;
  return d;
}

std::string format_element(const GradedF2Algebra& a, const F2Element& x) {
  std::ostringstream os;
  bool first = true;
  x.for_each_set([&](std::size_t i) {
    if (!first) os << " + ";
    os << a.label(i);
    first = false;
  });
  return first ? "0" : os.str();
}

F2Element Echelon::reduce(F2Element v) const {
  std::size_t p = v.lowest();
  while (p < width_ && pivot_row_[p] >= 0) {
    v ^= rows_[static_cast<std::size_t>(pivot_row_[p])];
    p = v.lowest();
  }
  return v;
}

bool Echelon::insert(const F2Element& v) {
  auto r = reduce(v);
  const std::size_t p = r.lowest();
  if (p >= width_) return false;
  pivot_row_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

F2Subspace F2Subspace::span(const GradedF2Algebra& a, const std::vector<F2Element>& generators) {
  const std::size_t n = a.dimension();
  Echelon ech(n);
  for (const auto& g : generators) {
    if (g.size() != n) throw DomainError("generator length does not match the algebra dimension");
    ech.insert(g);
  }
  std::vector<F2Element> rows = ech.rows();
  std::vector<std::size_t> pivots;
  for (const auto& r : rows) pivots.push_back(r.lowest());
  // Back-substitution: clear every pivot column in all other rows.
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (i != j && rows[j].test(pivots[i])) rows[j] ^= rows[i];

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int dx = a.degree(pivots[x]);
    const int dy = a.degree(pivots[y]);
    return dx != dy ? dx < dy : pivots[x] < pivots[y];
  });

  F2Subspace s;
  s.ambient_dimension_ = n;
  for (auto i : order) s.rows_.push_back(std::move(rows[i]));
  return s;
}

bool F2Subspace::contains(const F2Element& v) const {
  if (v.size() != ambient_dimension_) return false;
  Echelon ech(ambient_dimension_);
  for (const auto& r : rows_) ech.insert(r);
  return ech.contains(v);
}

bool F2Subspace::contains(const F2Subspace& other) const {
  if (other.ambient_dimension_ != ambient_dimension_) return false;
  Echelon ech(ambient_dimension_);
  for (const auto& r : rows_) ech.insert(r);
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const F2Element& r) { return ech.contains(r); });
}

F2Subspace positive_part(const GradedF2Algebra& a) {
  std::vector<F2Element> gens;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (a.degree(i) > 0) gens.push_back(a.basis_element(i));
  return F2Subspace::span(a, gens);
}

F2Subspace diagonal_kernel(const GradedF2Algebra& t) {
  const GradedF2Algebra* a = t.square_factor();
  if (a == nullptr) throw DomainError("algebra is not a recognized tensor square");
  const std::size_t n = a->dimension();
  const std::size_t nt = t.dimension();

  std::vector<F2Element> kernel;
  for (int d = 0; d <= t.top_degree(); ++d) {
    // Gaussian elimination on the images, tracking which combination of
    // degree-d basis vectors produced each row.
    std::vector<std::pair<F2Element, F2Element>> rows;  // (image, source)
    std::vector<int> pivot_row(n, -1);
    for (std::size_t idx = 0; idx < nt; ++idx) {
      if (t.degree(idx) != d) continue;
      F2Element image(n);
      for (auto k : a->product_terms(idx / n, idx % n)) image.flip(k);
      F2Element source = F2Element::unit(nt, idx);
      std::size_t p = image.lowest();
      while (p < n && pivot_row[p] >= 0) {
        const auto& r = rows[static_cast<std::size_t>(pivot_row[p])];
        image ^= r.first;
        source ^= r.second;
        p = image.lowest();
      }
      if (p >= n) {
        kernel.push_back(std::move(source));
      } else {
        pivot_row[p] = static_cast<int>(rows.size());
        rows.emplace_back(std::move(image), std::move(source));
      }
    }
  }
  return F2Subspace::span(t, kernel);
}

F2Subspace norm_subspace(const GradedF2Algebra& t) {
  const GradedF2Algebra* a = t.square_factor();
  if (a == nullptr) throw DomainError("algebra is not a recognized tensor square");
  const std::size_t n = a->dimension();
  std::vector<F2Element> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      F2Element v(t.dimension());
      v.set(i * n + j);
      v.set(j * n + i);
      gens.push_back(std::move(v));
    }
  return F2Subspace::span(t, gens);
}

namespace {

// Positive-degree homogeneous components of the rows of s, reduced to an
// independent family in row order.
std::vector<F2Element> graded_generators(const GradedF2Algebra& a, const F2Subspace& s) {
  Echelon ech(a.dimension());
  std::vector<F2Element> gens;
  for (const auto& row : s.rows())
    for (auto& c : homogeneous_components(a, row)) {
      if (a.degree(c.lowest()) == 0) continue;
      if (ech.insert(c)) gens.push_back(std::move(c));
    }
  return gens;
}

}  // namespace

CupLengthCertificate cup_length(const GradedF2Algebra& a, const F2Subspace& s) {
  if (s.ambient_dimension() != a.dimension())
    throw DomainError("subspace does not live in this algebra");
  const auto gens = graded_generators(a, s);

  struct Entry {
    F2Element value;
    std::vector<std::size_t> factors;
  };
  std::vector<Entry> level;
  for (std::size_t g = 0; g < gens.size(); ++g) level.push_back({gens[g], {g}});

  CupLengthCertificate cert;
  cert.product = a.unit();
  int k = 0;
  // V_{k+1} is spanned by products of a spanning set of V_k with the
  // generators; every kept vector is a literal product of generators.
  while (!level.empty()) {
    ++k;
    cert.length = k;
    cert.witnesses.clear();
    for (auto f : level.front().factors) cert.witnesses.push_back(gens[f]);
    cert.product = level.front().value;

    Echelon ech(a.dimension());
    std::vector<Entry> next;
    for (const auto& e : level) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto p = a.mul(e.value, gens[g]);
        if (p.none() || !ech.insert(p)) continue;
        auto factors = e.factors;
        factors.push_back(g);
        next.push_back({std::move(p), std::move(factors)});
      }
    }
    level = std::move(next);
  }
  return cert;
}

bool verify_certificate(const GradedF2Algebra& a, const CupLengthCertificate& cert,
                        const F2Subspace& s) {
  if (cert.length < 0 || cert.witnesses.size() != static_cast<std::size_t>(cert.length)) return false;
  if (s.ambient_dimension() != a.dimension() || cert.product.size() != a.dimension()) return false;

  Echelon hull(a.dimension());
  for (const auto& row : s.rows())
    for (const auto& c : homogeneous_components(a, row)) hull.insert(c);

  F2Element product = a.unit();
  for (const auto& w : cert.witnesses) {
    if (w.size() != a.dimension() || w.none()) return false;
    auto d = element_degree(a, w);
    if (!d || *d <= 0) return false;
    if (!hull.contains(w)) return false;
    product = a.mul(product, w);
  }
  if (product != cert.product) return false;
  return cert.length == 0 || product.any();
}

}  // namespace tc_atlas
