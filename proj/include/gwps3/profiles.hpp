#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwps3/numeric.hpp"
#include "gwps3/poly.hpp"

namespace gwps3 {

/// One block of the restriction divisor of a binary form: `multiplicity`
/// at each of `point_count` points, each point absorbing `point_degree`
/// of the raw weighted degree.
struct ProfileEntry {
  std::int64_t multiplicity = 0;
  std::int64_t point_count = 1;
  std::int64_t point_degree = 1;
  std::string location;
};

struct MultiplicityProfile {
  std::vector<ProfileEntry> entries;
  std::int64_t form_degree = 0;

  /// Multiplicities expanded per point, sorted descending.
  std::vector<std::int64_t> multiset() const;

  /// sum(multiplicity * point_count * point_degree) == form_degree.
  bool degree_accounting_ok() const;

  /// Same support with every multiplicity scaled by m (divisor m*D).
  MultiplicityProfile scaled(std::int64_t m) const;

  std::string to_string() const;
};

/// Divisor profile of a nonzero weighted-homogeneous form in exactly two
/// coordinates of coprime weights (a,b): valuations at the two coordinate
/// points plus the squarefree decomposition of the dehomogenized part.
MultiplicityProfile binary_profile(const SparsePoly& form);

struct PlaneGenus {
  Int genus = 0;
  bool flagged = false;  // negative value: non-irreducible or over-singular input
};

/// (d-1)(d-2)/2 - sum(deltas).
PlaneGenus plane_curve_genus(std::int64_t d, const std::vector<std::int64_t>& deltas);

/// Dense univariate polynomial over Q, coefficient of t^k at index k.
using UPoly = std::vector<Rat>;

UPoly upoly_derivative(const UPoly& f);
UPoly upoly_gcd(UPoly f, UPoly g);             // monic gcd
UPoly upoly_divexact(const UPoly& f, const UPoly& g);

/// Squarefree decomposition by iterated gcd with the derivative:
/// f = c * prod(factor_k ^ multiplicity_k), factors squarefree, monic,
/// pairwise coprime, listed with increasing multiplicity.
std::vector<std::pair<UPoly, std::int64_t>> squarefree_decomposition(const UPoly& f);

}  // namespace gwps3
