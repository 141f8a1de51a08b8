#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwps3/numeric.hpp"
#include "gwps3/poly.hpp"
#include "gwps3/weighted_space.hpp"

namespace gwps3 {

/// Primitive integer ray in Z^3.
struct Ray {
  std::array<std::int64_t, 3> v{0, 0, 0};

  bool operator==(const Ray&) const = default;
  bool is_primitive() const;
  std::string to_string() const;
};

/// Simplicial fan in Z^3: primitive rays plus maximal cones as sorted
/// ray-index triples.
struct Fan {
  std::vector<Ray> rays;
  std::vector<std::vector<int>> max_cones;
};

/// Fan of P(a0,a1,a2,a3): rays v0..v3 (one per coordinate) with
/// sum a_i v_i = 0, max cones all 3-subsets. When a0 = 1 the rays are
/// v0 = -(a1,a2,a3), v1..v3 the standard basis; otherwise a deterministic
/// unimodular-completion solution is used.
Fan wps_fan(const WeightedSpace& w);

struct BlowupResult {
  Fan fan;
  Ray new_ray;
  int new_ray_index = 0;
  std::int64_t multiplicity = 1;  // m with m * new_ray = sum coeffs_i * ray_i
};

/// Star subdivision at the primitive part of sum(coeffs_i * ray_i) over the
/// given face (any cone of the fan, listed as sorted ray indices). Every
/// maximal cone containing the face is split; throws DomainError when the
/// new ray is already present (degenerate subdivision).
BlowupResult weighted_blowup(const Fan& fan, const std::vector<int>& cone,
                             const std::vector<std::int64_t>& coeffs);

/// Equality as unordered ray sets with identically matched cone sets.
bool fans_set_equal(const Fan& a, const Fan& b);

/// Full fan validation: primitive distinct rays, simplicial maximal cones,
/// pairwise intersections in common faces (exact polyhedral check).
/// Throws ConsistencyError with a description when a condition fails.
void validate_fan(const Fan& fan);

/// Named source coordinates with a k-row integer grading (k = 1 for
/// weighted projective spaces, k = 2 for the blown-up models).
struct GradedCoords {
  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> grading;

  GradedCoords() = default;
  GradedCoords(std::vector<std::string> n, std::vector<std::vector<std::int64_t>> g);
  static GradedCoords simple(std::vector<std::string> names,
                             std::vector<std::int64_t> weights);

  std::size_t size() const { return names.size(); }
  std::size_t rows() const { return grading.size(); }

  bool operator==(const GradedCoords&) const = default;
};

/// A monomial rational map into a weighted projective space: one source
/// monomial per target coordinate. Construction checks homogeneity: the
/// source multi-degree of coordinate j must equal target_weight_j times a
/// rational vector common to all j.
class MonomialMap {
 public:
  MonomialMap(GradedCoords source, WeightedSpace target, std::vector<ExpVec> exponents);

  static MonomialMap identity(const GradedCoords& coords, const WeightedSpace& target);

  const GradedCoords& source() const { return source_; }
  const WeightedSpace& target() const { return target_; }
  const std::vector<ExpVec>& exponents() const { return exponents_; }

  /// The common rational degree pattern: multi_degree(col j) = w_j * c.
  const std::vector<Rat>& degree_pattern() const { return pattern_; }

  std::string coordinate_text(std::size_t j) const;
  std::string to_string() const;

  bool operator==(const MonomialMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && exponents_ == o.exponents_;
  }

 private:
  GradedCoords source_;
  WeightedSpace target_;
  std::vector<ExpVec> exponents_;
  std::vector<Rat> pattern_;
};

/// Substitution of monomials into monomials; the target of f must match the
/// source of g as a graded coordinate list (g's grading has one row equal to
/// f's target weights).
MonomialMap compose(const MonomialMap& g, const MonomialMap& f);

/// Certificate c (rational vector over source coordinates) with
/// exps_f[j] - exps_g[j] = target_weight_j * c for all j, when one exists;
/// this is equality of the maps modulo the weighted scaling action.
std::optional<std::vector<Rat>> equal_mod_scaling(const MonomialMap& f,
                                                  const MonomialMap& g);

/// Substitute each target coordinate of p by its source monomial. Requires
/// a single-row source grading and p homogeneous on the target weights.
SparsePoly pullback(const MonomialMap& f, const SparsePoly& p);

/// Source coordinates c whose coordinate point p_c (all other coordinates
/// zero) is an indeterminacy point: no map coordinate is a pure power of c.
/// Reported for single-row gradings only.
std::vector<std::string> coordinate_indeterminacy_points(const MonomialMap& f);

/// JSON forms: fans as {"rays":[[x,y,z],...],"cones":[[i,j,k],...]},
/// monomial maps as named exponent tables.
std::string fan_to_json(const Fan& fan);
Fan fan_from_json(const std::string& text);
std::string map_to_json(const MonomialMap& f);
MonomialMap map_from_json(const std::string& text);

}  // namespace gwps3
