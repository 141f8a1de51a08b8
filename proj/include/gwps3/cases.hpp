#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwps3/poly.hpp"
#include "gwps3/profiles.hpp"
#include "gwps3/toric.hpp"

namespace gwps3::cases {

/// Toric factorization data for case 9: the projection P(1,4,5,10) -> P(1,1,1,2)
/// factors through weighted blow-ups of both sides with a common refined fan.
struct BirationalFactorization {
  Fan fan_p;
  Fan fan_p_prime;
  MonomialMap phi;   // P -> P'
  MonomialMap eps1;  // Phat -> P, contracts the exceptional coordinate
  MonomialMap eps2;  // Phat -> P'
  std::vector<int> cone_p;                  // face of fan_p subdivided
  std::vector<std::int64_t> coeffs_p;       // blow-up weights on fan_p
  std::vector<int> cone_p_prime;            // face of fan_p' subdivided
  std::vector<std::int64_t> coeffs_p_prime; // blow-up weights on fan_p'
  Ray expected_new_ray_p;                   // e_zeta
  Ray expected_new_ray_p_prime;             // e_x
};

BirationalFactorization factorization_case9();

/// Vertex-projection map of the given case (9, 10, 12, 13 or 14), written in
/// the source coordinates [x:y:z:w].
MonomialMap projection_map(int case_id);

/// The alternative degree-2 model map of case 14: [x : y^2 : z : yw].
MonomialMap psi_case14();

/// Maps of the case-11 halved-polarization model.
struct Case11Maps {
  MonomialMap v2;       // P(1,2,3,6) -> P(1,1,2,3,3)
  MonomialMap phi;      // P(1,2,3,6) -> P(1,1,1,3)
  MonomialMap phi_inv;  // P(1,1,1,3) -> P(1,2,3,6)
  MonomialMap psi;      // P(1,1,1,3) -> P(1,1,2,3,3)
};

Case11Maps maps_case11();

/// Outcome of one curve-section restriction computation.
struct ProfileOutcome {
  std::vector<std::int64_t> multiset;
  std::int64_t form_degree = 0;
  bool degree_ok = false;
  int reseeds = 0;
  std::string note;
};

// Seeded restriction pipelines; "general" coefficients are drawn from the
// seed and degenerate draws trigger an automatic reseed (logged in note).
ProfileOutcome profile_case9_inflection(std::uint64_t seed);
ProfileOutcome profile_case9_generic_line(std::uint64_t seed);
ProfileOutcome profile_case10_tangent(std::uint64_t seed);
ProfileOutcome profile_case12_ramification(std::uint64_t seed);
ProfileOutcome profile_case13_heptuple(std::uint64_t seed);
ProfileOutcome profile_case14_fiber(std::uint64_t seed);
ProfileOutcome profile_case14_tritangent(std::uint64_t seed);

struct PullbackCheck {
  bool divisible = false;
  std::int64_t contracted_valuation = 0;
  std::int64_t quotient_degree = 0;
  bool quotient_homogeneous = false;
};

/// Pullback of the case-9 quintic section equation under the projection map:
/// divisible by x^5 with a homogeneous degree-20 quotient.
PullbackCheck pullback_case9(std::uint64_t seed);

/// Pullback of the case-14 alternative section equation under psi:
/// divisible by y^2 with a homogeneous degree-30 quotient.
PullbackCheck pullback_case14(std::uint64_t seed);

/// Anticanonical section equation of the projected model, for reuse in tests:
/// case 9 returns u0*f4 + u1^5 on P(1,1,1,2) with f4 drawn from the seed.
SparsePoly section_equation_case9(std::uint64_t seed);
SparsePoly section_equation_case14(std::uint64_t seed);

}  // namespace gwps3::cases
