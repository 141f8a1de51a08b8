#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwps3/intersect.hpp"
#include "gwps3/reference_data.hpp"

namespace gwps3 {

struct VerifyOptions {
  std::vector<std::uint64_t> seeds = {1, 2, 3};
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t fail_count() const;
  std::string render_table() const;
  std::string render_json() const;
  std::string render_csv() const;
};

/// Classification table in the canonical case numbering, recomputed and
/// cross-checked against the enumerated list.
struct ClassificationTableRow {
  int case_id = 0;
  WeightedSpace weights{{1}};
  std::int64_t l = 0;
  std::int64_t sigma = 0;
  std::int64_t index = 0;
};
std::vector<ClassificationTableRow> classification_table(const ReferenceData& ref);
std::string render_classification(const std::vector<ClassificationTableRow>& rows);

// Report sections.
std::vector<CheckResult> classification_checks(const ReferenceData& ref);
std::vector<CheckResult> genus_checks(const ReferenceData& ref);
std::vector<CheckResult> hilbert_checks(const ReferenceData& ref);
std::vector<CheckResult> veronese_checks(const ReferenceData& ref);
std::vector<CheckResult> basepoint_checks(const ReferenceData& ref);
std::vector<CheckResult> toric_checks();
std::vector<CheckResult> degree_checks(const ReferenceData& ref);
std::vector<CheckResult> profile_checks(const ReferenceData& ref, const VerifyOptions& opt);
std::vector<CheckResult> pullback_divisibility_checks(const VerifyOptions& opt);

/// The full deterministic suite (classification, invariant tables,
/// hypersurface models, toric factorization, degree and dimension
/// identities, curve-section profiles, pullback divisibility).
VerificationReport verification_report(const ReferenceData& ref,
                                       const VerifyOptions& opt = {});

}  // namespace gwps3
