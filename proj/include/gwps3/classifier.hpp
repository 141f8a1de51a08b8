#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gwps3/numeric.hpp"
#include "gwps3/weighted_space.hpp"

namespace gwps3 {

/// true iff every subset obtained by dropping one weight has gcd 1.
bool is_well_formed(const WeightedSpace& w);

struct GorensteinInvariants {
  std::int64_t l = 0;      // lcm of the weights
  std::int64_t sigma = 0;  // sum of the weights
  std::int64_t index = 0;  // sigma / l

  bool operator==(const GorensteinInvariants&) const = default;
};

/// (l, sigma, sigma/l). Throws NotGorensteinError when a weight fails to
/// divide sigma; requires 4 weights, well-formed.
GorensteinInvariants gorenstein_invariants(const WeightedSpace& w);

/// All multisets {b0<=b1<=b2<=b3} of positive integers with
/// 1/b0+1/b1+1/b2+1/b3 = 1, by exhaustive bounded search.
std::vector<std::array<std::int64_t, 4>> enumerate_unit_fraction_quadruples();

struct ClassifierRawEntry {
  std::array<std::int64_t, 4> quadruple;
  WeightedSpace weights;
  bool well_formed;
};

/// Pre-filter view of the enumeration: one entry per unit-fraction
/// quadruple, before well-formedness filtering and dedup.
std::vector<ClassifierRawEntry> enumerate_gorenstein_wps3_raw();

/// The Gorenstein weighted projective 3-spaces, canonically sorted
/// (ascending weights, lexicographic). Throws ConsistencyError if the
/// count is not 14.
std::vector<WeightedSpace> enumerate_gorenstein_wps3();

/// true iff every weight of w divides m. (w may have any length.)
bool is_basepoint_free(const WeightedSpace& w, std::int64_t m);

/// g with (-K)^3 = 2g-2, i.e. g = 1 + sigma^3/(2*prod(weights)).
/// Throws ConsistencyError when the value is not a positive integer.
Int anticanonical_genus(const WeightedSpace& w);

/// Genus of the primitive class: 1 + (g-1)/i^2; throws DomainError when
/// i^2 does not divide 2g-2.
Int primitive_genus(const Int& g, std::int64_t i);

}  // namespace gwps3
