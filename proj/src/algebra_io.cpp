#include "tc_atlas/algebra_io.hpp"

#include "tc_atlas/errors.hpp"

namespace tc_atlas {

using nlohmann::json;

json algebra_to_json(const GradedF2Algebra& a) {
  json basis = json::array();
  for (const auto& b : a.basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
  json mult = json::array();
  for (const auto& e : a.nonzero_products()) mult.push_back(json::array({e.left, e.right, e.terms}));
  return {{"top_degree", a.top_degree()}, {"basis", std::move(basis)}, {"mult", std::move(mult)}};
}

GradedF2Algebra algebra_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    const int top = doc.at("top_degree").get<int>();
    std::vector<BasisElement> basis;
    for (const auto& b : doc.at("basis"))
      basis.push_back({b.at("label").get<std::string>(), b.at("degree").get<int>()});
    std::vector<ProductEntry> products;
    for (const auto& m : doc.at("mult")) {
      if (!m.is_array() || m.size() != 3) throw ParseError("mult entries must be [i, j, [k, ...]]");
      products.push_back({m[0].get<std::size_t>(), m[1].get<std::size_t>(),
                          m[2].get<std::vector<std::size_t>>()});
    }
    return GradedF2Algebra(top, std::move(basis), products);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
}

std::string algebra_to_string(const GradedF2Algebra& a, int indent) {
  return algebra_to_json(a).dump(indent);
}

GradedF2Algebra algebra_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

}  // namespace tc_atlas
