#include "oracle.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "tc_atlas/algebra_io.hpp"

namespace oracle {

DenseAlgebra DenseAlgebra::from_json(const nlohmann::json& doc) {
  DenseAlgebra a;
  for (const auto& b : doc.at("basis")) {
    a.label.push_back(b.at("label").get<std::string>());
    a.degree.push_back(b.at("degree").get<int>());
  }
  a.n = static_cast<int>(a.label.size());
  if (a.n > 32) throw std::invalid_argument("oracle handles at most 32 basis elements");
  a.table.assign(static_cast<std::size_t>(a.n * a.n), 0);
  for (const auto& e : doc.at("mult")) {
    Mask m = 0;
    for (const auto& k : e.at(2)) m ^= Mask{1} << k.get<int>();
    a.table[static_cast<std::size_t>(e.at(0).get<int>() * a.n + e.at(1).get<int>())] = m;
  }
  return a;
}

DenseAlgebra DenseAlgebra::from(const tc_atlas::GradedF2Algebra& a) { return from_json(tc_atlas::algebra_to_json(a)); }

Mask DenseAlgebra::mul(Mask x, Mask y) const {
  Mask out = 0;
  for (int i = 0; i < n; ++i) {
    if (!(x >> i & 1u)) continue;
    for (int j = 0; j < n; ++j)
      if (y >> j & 1u) out ^= table[static_cast<std::size_t>(i * n + j)];
  }
  return out;
}

int DenseAlgebra::index_of(const std::string& l) const {
  for (int i = 0; i < n; ++i)
    if (label[static_cast<std::size_t>(i)] == l) return i;
  throw std::invalid_argument("no basis element " + l);
}

std::vector<Mask> span_elements(const std::vector<Mask>& gens) {
  std::set<Mask> seen{0};
  for (Mask g : gens) {
    std::vector<Mask> add;
    for (Mask x : seen) add.push_back(x ^ g);
    seen.insert(add.begin(), add.end());
  }
  return {seen.begin(), seen.end()};
}

std::vector<Mask> positive_basis(const DenseAlgebra& a) {
  std::vector<Mask> out;
  for (int i = 0; i < a.n; ++i)
    if (a.degree[static_cast<std::size_t>(i)] > 0) out.push_back(Mask{1} << i);
  return out;
}

namespace {

std::pair<int, int> split_label(const DenseAlgebra& square, const DenseAlgebra& factor, int k) {
  // Factor labels may contain '|' themselves; take the unique split into two labels.
  const auto& l = square.label[static_cast<std::size_t>(k)];
  std::vector<std::pair<int, int>> found;
  for (auto bar = l.find('|'); bar != std::string::npos; bar = l.find('|', bar + 1)) {
    const std::string left = l.substr(0, bar), right = l.substr(bar + 1);
    int u = -1, v = -1;
    for (int i = 0; i < factor.n; ++i) {
      if (factor.label[static_cast<std::size_t>(i)] == left) u = i;
      if (factor.label[static_cast<std::size_t>(i)] == right) v = i;
    }
    if (u >= 0 && v >= 0) found.emplace_back(u, v);
  }
  if (found.size() != 1) throw std::invalid_argument("ambiguous square label " + l);
  return found.front();
}

}  // namespace

std::vector<Mask> kernel_elements(const DenseAlgebra& square, const DenseAlgebra& factor) {
  if (square.n > 20) throw std::invalid_argument("kernel enumeration limited to 20 basis elements");
  std::vector<Mask> image(static_cast<std::size_t>(square.n));
  for (int k = 0; k < square.n; ++k) {
    const auto [u, v] = split_label(square, factor, k);
    image[static_cast<std::size_t>(k)] = factor.mul(Mask{1} << u, Mask{1} << v);
  }
  std::vector<Mask> out;
  const Mask limit = Mask{1} << square.n;
  for (Mask x = 0; x < limit; ++x) {
    Mask y = 0;
    for (int k = 0; k < square.n; ++k)
      if (x >> k & 1u) y ^= image[static_cast<std::size_t>(k)];
    if (y == 0) out.push_back(x);
  }
  return out;
}

std::vector<Mask> norm_generators(const DenseAlgebra& square, const DenseAlgebra& factor) {
  std::vector<Mask> out;
  for (int k = 0; k < square.n; ++k) {
    const auto [u, v] = split_label(square, factor, k);
    if (u >= v) continue;
    const int swapped = square.index_of(factor.label[static_cast<std::size_t>(v)] + "|" +
                                        factor.label[static_cast<std::size_t>(u)]);
    out.push_back((Mask{1} << k) | (Mask{1} << swapped));
  }
  return out;
}

int cup_length(const DenseAlgebra& a, const std::vector<Mask>& elements) {
  std::set<Mask> gens;
  for (Mask x : elements) {
    std::map<int, Mask> parts;
    for (int i = 0; i < a.n; ++i)
      if (x >> i & 1u) parts[a.degree[static_cast<std::size_t>(i)]] ^= Mask{1} << i;
    for (const auto& [d, m] : parts)
      if (d > 0) gens.insert(m);
  }
  std::set<Mask> level(gens.begin(), gens.end());
  int k = 0;
  while (!level.empty()) {
    ++k;
    std::set<Mask> next;
    for (Mask p : level)
      for (Mask g : gens)
        if (Mask q = a.mul(p, g)) next.insert(q);
    level = std::move(next);
  }
  return k;
}

Mask to_mask(const tc_atlas::F2Element& x) {
  Mask m = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.test(i)) m |= Mask{1} << i;
  return m;
}

}  // namespace oracle
