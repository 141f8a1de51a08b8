#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwps3/numeric.hpp"
#include "gwps3/reference_data.hpp"
#include "gwps3/weighted_space.hpp"

namespace gwps3 {

/// Product of dim(W) divisor class degrees divided by the weight product:
/// O(d1)...O(dn) on P(a0..an) as an exact rational.
Rat top_intersection(const WeightedSpace& w, const std::vector<std::int64_t>& degrees);

/// Degree of a complete intersection of the given hypersurface classes
/// against the remaining powers of O(polarization):
/// prod(hyp) * pol^(dim-k) / prod(weights).
Rat model_degree(const WeightedSpace& ambient,
                 const std::vector<std::int64_t>& hypersurface_degrees,
                 std::int64_t polarization);

/// One verification line: computed vs expected with a pass flag.
struct CheckResult {
  std::string check_id;
  std::string anchor;
  std::string computed;
  std::string expected;
  bool pass = false;
  std::string note;
};

/// Ambient model of a maximal extension used for the degree checks.
struct ExtensionModel {
  int case_id = 0;
  std::vector<std::int64_t> ambient;
  std::vector<std::int64_t> hypersurface_degrees;
  std::int64_t polarization = 1;
  Rat expected_degree;
  std::string label;
  std::string note;
  /// dim of this model; the maximal extension satisfies dim_y == model dim
  /// except for fibered case 14 where the pencil members are hyperplane
  /// sections (model dim == dim_y - 1).
  std::int64_t model_dim() const {
    return static_cast<std::int64_t>(ambient.size()) - 1 -
           static_cast<std::int64_t>(hypersurface_degrees.size());
  }
};

const std::vector<ExtensionModel>& extension_models();

/// Per-case report: (a) each ambient model degree equals 2g-2, (b) the
/// maximal extension dimension equals 1 + alpha, (c) the non-extendable
/// case maps to itself. Failures are report entries, never exceptions.
std::vector<CheckResult> extension_consistency(const ReferenceCase& rc);

}  // namespace gwps3
