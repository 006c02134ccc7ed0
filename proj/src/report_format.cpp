#include "tc_atlas/report_format.hpp"

#include <algorithm>
#include <sstream>

namespace tc_atlas {

using nlohmann::json;

namespace {

std::string cell(const std::optional<PublishedValue>& p) { return p ? std::to_string(p->value) : ""; }

std::vector<std::string> row_cells(const BoundReport& r) {
  return {r.space.name,
          std::to_string(r.space.dim),
          std::to_string(r.cl),
          std::to_string(r.zdcl),
          std::to_string(r.ncl),
          std::to_string(r.tc.lower.value),
          std::to_string(r.tc.upper.value),
          std::to_string(r.tcs.lower.value),
          std::to_string(r.tcs.upper.value),
          std::to_string(r.tcs_sigma.lower.value),
          std::to_string(r.tcs_sigma.upper.value),
          cell(r.space.published.tc),
          cell(r.space.published.tcs),
          cell(r.space.published.tcs_sigma)};
}

json bound_json(const Bound& b, bool certificates) {
  json j{{"value", b.value}, {"method", b.method}};
  if (certificates && b.certificate) {
    j["certificate"] = {{"length", b.certificate->length},
                        {"witnesses", b.certificate->witnesses},
                        {"product", b.certificate->product}};
  }
  return j;
}

json invariant_json(const InvariantBounds& b, bool certificates) {
  return {{"lower", bound_json(b.lower, certificates)}, {"upper", bound_json(b.upper, certificates)}};
}

json published_json(const std::optional<PublishedValue>& p) {
  if (!p) return nullptr;
  return {{"value", p->value}, {"citation", p->citation}};
}

}  // namespace

json report_to_json(const BoundReport& r, bool certificates) {
  return {{"space", r.space.name},
          {"dim", r.space.dim},
          {"is_closed_manifold", r.space.is_closed_manifold},
          {"is_aspherical", r.space.is_aspherical},
          {"cl", r.cl},
          {"zdcl", r.zdcl},
          {"ncl", r.ncl},
          {"tc", invariant_json(r.tc, certificates)},
          {"tcs", invariant_json(r.tcs, certificates)},
          {"tcs_sigma", invariant_json(r.tcs_sigma, certificates)},
          {"published",
           {{"tc", published_json(r.space.published.tc)},
            {"tcs", published_json(r.space.published.tcs)},
            {"tcs_sigma", published_json(r.space.published.tcs_sigma)}}},
          {"issues", r.issues}};
}

json reports_to_json(const std::vector<BoundReport>& rows, bool certificates) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(report_to_json(r, certificates));
  return out;
}

std::string reports_to_csv(const std::vector<BoundReport>& rows) {
  std::ostringstream os;
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& r : rows) {
    const auto cells = row_cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  }
  return os.str();
}

std::string reports_to_text(const std::vector<BoundReport>& rows, bool certificates) {
  const auto& cols = report_columns();
  std::vector<std::vector<std::string>> table{cols};
  for (const auto& r : rows) table.push_back(row_cells(r));
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& line : table)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());

  std::ostringstream os;
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << '\n';
  }
  for (const auto& r : rows) {
    for (const auto& issue : r.issues) os << "warning: " << r.space.name << ": " << issue << '\n';
    if (!certificates) continue;
    const std::pair<const char*, const InvariantBounds*> inv[] = {
        {"TC", &r.tc}, {"TC^S", &r.tcs}, {"TC^S_sigma", &r.tcs_sigma}};
    for (const auto& [name, b] : inv) {
      os << r.space.name << "  " << name << " lower " << b->lower.value << " [" << b->lower.method << "]";
      if (b->lower.certificate) {
        os << "  witnesses:";
        for (const auto& w : b->lower.certificate->witnesses) os << " (" << w << ")";
        os << "  product: " << b->lower.certificate->product;
      }
      os << '\n';
      os << r.space.name << "  " << name << " upper " << b->upper.value << " [" << b->upper.method << "]\n";
    }
  }
  return os.str();
}

}  // namespace tc_atlas
