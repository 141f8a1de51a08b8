#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwps3/errors.hpp"
#include "gwps3/numeric.hpp"

namespace gwps3 {

/// Named weighted coordinates of a graded polynomial ring.
struct CoordSystem {
  std::vector<std::string> names;
  std::vector<std::int64_t> weights;

  CoordSystem() = default;
  CoordSystem(std::vector<std::string> n, std::vector<std::int64_t> w);

  std::size_t size() const { return names.size(); }
  std::size_t index_of(const std::string& name) const;
  bool has(const std::string& name) const;

  /// Subsystem keeping the listed coordinates, in the listed order.
  CoordSystem subsystem(const std::vector<std::string>& keep) const;

  /// "coords: u0:1 u1:1 v:2"
  std::string header() const;
  static CoordSystem parse_header(const std::string& line);

  bool operator==(const CoordSystem&) const = default;
};

/// Sparse multivariate polynomial over Q with weighted-homogeneity
/// bookkeeping. Terms are kept in the project term order (weighted degree,
/// then lexicographic), with no zero coefficients stored.
class SparsePoly {
 public:
  struct TermCmp {
    std::vector<std::int64_t> weights;
    bool operator()(const ExpVec& a, const ExpVec& b) const;
  };
  using TermMap = std::map<ExpVec, Rat, TermCmp>;

  explicit SparsePoly(CoordSystem cs);

  static SparsePoly zero(const CoordSystem& cs) { return SparsePoly(cs); }
  static SparsePoly term(const CoordSystem& cs, const ExpVec& e, const Rat& c);
  static SparsePoly constant(const CoordSystem& cs, const Rat& c);
  static SparsePoly variable(const CoordSystem& cs, const std::string& name);

  const CoordSystem& coords() const { return coords_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Common weighted degree of all terms; absent when inhomogeneous or zero
  /// (use is_zero to tell the zero flag apart).
  std::optional<std::int64_t> homogeneous_degree() const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly scaled(const Rat& c) const;
  SparsePoly pow(std::int64_t k) const;

  bool operator==(const SparsePoly& o) const {
    return coords_ == o.coords_ && terms_ == o.terms_;
  }

  /// Exact substitution var <- r; r lives on the same coordinate system and
  /// must be homogeneous of the variable's weight.
  SparsePoly substitute(const std::string& var, const SparsePoly& r) const;

  /// Set the named coordinate to zero.
  SparsePoly restrict_hyperplane(const std::string& var) const;

  /// Smallest exponent of var over all terms (zero polynomial -> error).
  std::int64_t valuation(const std::string& var) const;

  /// Exact division by var^k; throws DomainError when not divisible.
  SparsePoly divide_power(const std::string& var, std::int64_t k) const;

  /// Re-express on a coordinate subsystem; every coordinate outside it must
  /// have exponent zero in every term.
  SparsePoly to_coords(const CoordSystem& target) const;
  /// Embed into a larger system containing all current coordinates by name.
  SparsePoly lift_to(const CoordSystem& target) const;

  /// Two-line text form: the coords header, then "poly: c * x^a y^b + ...".
  std::string text() const;
  std::string poly_line() const;
  static SparsePoly parse(const std::string& text);
  static SparsePoly parse_poly_line(const CoordSystem& cs, const std::string& line);

 private:
  void add_term(const ExpVec& e, const Rat& c);

  CoordSystem coords_;
  TermMap terms_;
};

/// Every monomial of degree d with a nonzero coefficient drawn
/// deterministically from the seed (small numerators and denominators).
SparsePoly random_homogeneous(const CoordSystem& cs, std::int64_t d,
                              std::uint64_t seed);

}  // namespace gwps3
