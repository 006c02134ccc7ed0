#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tc_atlas/spaces.hpp"

namespace tc_atlas {

/// Fixed CSV column order shared by every rendering.
inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> columns{
      "space",     "dim",       "cl",           "zdcl",          "ncl",
      "tc_lo",     "tc_hi",     "tcs_lo",       "tcs_hi",        "tcssig_lo",
      "tcssig_hi", "published_tc", "published_tcs", "published_tcs_sigma"};
  return columns;
}

nlohmann::json report_to_json(const BoundReport& r, bool certificates = false);
nlohmann::json reports_to_json(const std::vector<BoundReport>& rows, bool certificates = false);

/// Header line plus one line per row; published columns are empty when absent.
std::string reports_to_csv(const std::vector<BoundReport>& rows);

/// Aligned table for terminals.
std::string reports_to_text(const std::vector<BoundReport>& rows, bool certificates = false);

}  // namespace tc_atlas
