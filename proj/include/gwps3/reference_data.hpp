#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gwps3/numeric.hpp"
#include "gwps3/weighted_space.hpp"

namespace gwps3 {

/// One row of the classification table (all 14 cases).
struct ClassificationRow {
  int case_id = 0;
  WeightedSpace weights{{1}};
  bool extendable = false;
  std::string extension;  // "itself" when not extendable
};

/// Reference invariants of the polarized K3 sections, cases 9..14.
/// alpha and sing_s are imported values; i_s is validated arithmetically
/// (i_s^2 | 2g-2) but not derived here.
struct ReferenceCase {
  int case_id = 0;
  WeightedSpace weights{{1}};
  std::int64_t i_s = 1;
  Int g = 0;
  Int g_c = 0;
  std::int64_t alpha = 0;
  std::int64_t dim_y = 0;
  std::string sing_s;
  std::string extension;
};

struct ReferenceData {
  std::vector<ClassificationRow> classification;  // case ids 1..14
  std::vector<ReferenceCase> cases;               // case ids 9..14

  const ClassificationRow& classification_row(int case_id) const;
  const ReferenceCase& case_row(int case_id) const;
};

/// Parse the versioned plain-text reference table. Parse or validation
/// errors throw ParseError with the offending line number. Validation
/// recomputes g, g(C) and the Gorenstein invariants and cross-checks the
/// stated values.
ReferenceData parse_reference_data(std::istream& in, const std::string& source_name);
ReferenceData parse_reference_data_string(const std::string& text, const std::string& source_name);
ReferenceData load_reference_file(const std::string& path);

/// The table compiled into the library (same content as data/reference_cases.txt).
const ReferenceData& builtin_reference_data();

}  // namespace gwps3
