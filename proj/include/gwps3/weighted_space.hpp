#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwps3/errors.hpp"
#include "gwps3/numeric.hpp"

namespace gwps3 {

/// The ambient P(a0,...,an): positive integer weights with gcd 1.
/// Weights keep their construction order; constructions that depend on
/// coordinate names (monomial maps, Veronese targets) rely on that order,
/// the classifier canonicalizes by sorting.
class WeightedSpace {
 public:
  explicit WeightedSpace(std::vector<std::int64_t> weights);

  std::size_t coord_count() const { return weights_.size(); }
  int dim() const { return static_cast<int>(weights_.size()) - 1; }
  std::int64_t weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& weights() const { return weights_; }

  std::int64_t weight_lcm() const { return lcm_; }
  std::int64_t weight_sum() const { return sigma_; }

  WeightedSpace sorted() const;

  bool operator==(const WeightedSpace& o) const {
    return weights_ == o.weights_;
  }
  bool operator!=(const WeightedSpace& o) const { return !(*this == o); }

  /// "P(1,1,1,2)" with repeated weights grouped as "P(1^3,2)".
  std::string label() const;
  /// "1,1,1,2"
  std::string csv() const;

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t lcm_ = 1;
  std::int64_t sigma_ = 0;
};

/// The class of O(n) on a weighted projective space.
struct DivisorClass {
  std::int64_t degree = 0;

  bool is_cartier(const WeightedSpace& w) const {
    for (auto a : w.weights())
      if (degree % a != 0) return false;
    return true;
  }
};

WeightedSpace parse_weights(const std::string& csv);

}  // namespace gwps3
