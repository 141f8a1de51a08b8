#include "gwps3/cases.hpp"

#include "gwps3/errors.hpp"

namespace gwps3::cases {

namespace {

std::uint64_t subseed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step keeps the draws for distinct roles independent
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ExpVec mono(std::initializer_list<std::int64_t> e) { return ExpVec(e); }

}  // namespace

MonomialMap projection_map(int case_id) {
  const GradedCoords xyzw9 =
      GradedCoords::simple({"x", "y", "z", "w"}, {1, 4, 5, 10});
  switch (case_id) {
    case 9:
      return MonomialMap(xyzw9, WeightedSpace({1, 1, 1, 2}),
                         {mono({5, 0, 0, 0}), mono({1, 1, 0, 0}),
                          mono({0, 0, 1, 0}), mono({0, 0, 0, 1})});
    case 10:
      return MonomialMap(GradedCoords::simple({"x", "y", "z", "w"}, {1, 2, 6, 9}),
                         WeightedSpace({1, 1, 3, 5}),
                         {mono({2, 0, 0, 0}), mono({0, 1, 0, 0}),
                          mono({0, 0, 1, 0}), mono({1, 0, 0, 1})});
    case 12:
      return MonomialMap(GradedCoords::simple({"x", "y", "z", "w"}, {1, 3, 8, 12}),
                         WeightedSpace({1, 1, 3, 4}),
                         {mono({3, 0, 0, 0}), mono({0, 1, 0, 0}),
                          mono({1, 0, 1, 0}), mono({0, 0, 0, 1})});
    case 13:
      return MonomialMap(GradedCoords::simple({"x", "y", "z", "w"}, {1, 6, 14, 21}),
                         WeightedSpace({1, 1, 2, 3}),
                         {mono({7, 0, 0, 0}), mono({1, 1, 0, 0}),
                          mono({0, 0, 1, 0}), mono({0, 0, 0, 1})});
    case 14:
      return MonomialMap(GradedCoords::simple({"x", "y", "z", "w"}, {2, 3, 10, 15}),
                         WeightedSpace({1, 2, 4, 5}),
                         {mono({0, 1, 0, 0}), mono({3, 0, 0, 0}),
                          mono({1, 0, 1, 0}), mono({0, 0, 0, 1})});
    default:
      throw DomainError("no projection map for case " + std::to_string(case_id));
  }
}

MonomialMap psi_case14() {
  return MonomialMap(GradedCoords::simple({"x", "y", "z", "w"}, {2, 3, 10, 15}),
                     WeightedSpace({1, 3, 5, 9}),
                     {mono({1, 0, 0, 0}), mono({0, 2, 0, 0}),
                      mono({0, 0, 1, 0}), mono({0, 1, 0, 1})});
}

Case11Maps maps_case11() {
  const GradedCoords xyzw = GradedCoords::simple({"x", "y", "z", "w"}, {1, 2, 3, 6});
  const GradedCoords abc = GradedCoords::simple({"a0", "a1", "a2", "b"}, {1, 1, 1, 3});
  Case11Maps m{
      MonomialMap(xyzw, WeightedSpace({1, 1, 2, 3, 3}),
                  {mono({2, 0, 0, 0}), mono({0, 1, 0, 0}), mono({1, 0, 1, 0}),
                   mono({0, 0, 2, 0}), mono({0, 0, 0, 1})}),
      MonomialMap(xyzw, WeightedSpace({1, 1, 1, 3}),
                  {mono({3, 0, 0, 0}), mono({1, 1, 0, 0}), mono({0, 0, 1, 0}),
                   mono({3, 0, 0, 1})}),
      MonomialMap(abc, WeightedSpace({1, 2, 3, 6}),
                  {mono({1, 0, 0, 0}), mono({1, 1, 0, 0}), mono({2, 0, 1, 0}),
                   mono({3, 0, 0, 1})}),
      MonomialMap(abc, WeightedSpace({1, 1, 2, 3, 3}),
                  {mono({1, 0, 0, 0}), mono({0, 1, 0, 0}), mono({1, 0, 1, 0}),
                   mono({1, 0, 2, 0}), mono({0, 0, 0, 1})})};
  return m;
}

BirationalFactorization factorization_case9() {
  BirationalFactorization f{
      wps_fan(WeightedSpace({1, 4, 5, 10})),
      wps_fan(WeightedSpace({1, 1, 1, 2})),
      projection_map(9),
      MonomialMap(GradedCoords({"x", "zeta", "y", "z", "w"},
                               {{1, 0, 4, 5, 10}, {0, 1, 1, 1, 2}}),
                  WeightedSpace({1, 4, 5, 10}),
                  {mono({1, 1, 0, 0, 0}), mono({0, 3, 1, 0, 0}),
                   mono({0, 4, 0, 1, 0}), mono({0, 8, 0, 0, 1})}),
      MonomialMap(GradedCoords({"x", "zeta", "y", "z", "w"},
                               {{1, 0, 4, 5, 10}, {0, 1, 1, 1, 2}}),
                  WeightedSpace({1, 1, 1, 2}),
                  {mono({5, 1, 0, 0, 0}), mono({1, 0, 1, 0, 0}),
                   mono({0, 0, 0, 1, 0}), mono({0, 0, 0, 0, 1})}),
      {0, 2, 3},
      {1, 1, 2},
      {0, 1},
      {5, 1},
      Ray{{-1, -1, -2}},
      Ray{{-4, -5, -10}}};
  return f;
}

namespace {

const CoordSystem& cs_case9() {
  static const CoordSystem cs({"u0", "u1", "u2", "v"}, {1, 1, 1, 2});
  return cs;
}

const CoordSystem& cs_case14_sections() {
  static const CoordSystem cs({"u0", "u1", "v", "w"}, {1, 1, 2, 3});
  return cs;
}

SparsePoly coord_times(const CoordSystem& cs, const std::string& var,
                       const SparsePoly& f) {
  return SparsePoly::variable(cs, var) * f;
}

}  // namespace

SparsePoly section_equation_case9(std::uint64_t seed) {
  const auto& cs = cs_case9();
  const SparsePoly f4 = random_homogeneous(cs, 4, subseed(seed, 1));
  return coord_times(cs, "u0", f4) + SparsePoly::variable(cs, "u1").pow(5);
}

SparsePoly section_equation_case14(std::uint64_t seed) {
  const CoordSystem cs({"u", "v", "s", "t"}, {1, 3, 5, 9});
  const SparsePoly f15 = random_homogeneous(cs, 15, subseed(seed, 1));
  return coord_times(cs, "v", f15) + SparsePoly::variable(cs, "t").pow(2);
}

ProfileOutcome profile_case9_inflection(std::uint64_t seed) {
  const auto& cs = cs_case9();
  const SparsePoly section = section_equation_case9(seed);
  const SparsePoly alpha =
      random_homogeneous(cs.subsystem({"u0", "u1", "u2"}), 2, subseed(seed, 2))
          .lift_to(cs);
  const SparsePoly plane_quintic = section.substitute("v", alpha);
  const SparsePoly restricted = plane_quintic.restrict_hyperplane("u0");
  const SparsePoly binary = restricted.to_coords(cs.subsystem({"u1", "u2"}));
  const auto prof = binary_profile(binary);
  return {prof.multiset(), prof.form_degree, prof.degree_accounting_ok(), 0, ""};
}

ProfileOutcome profile_case9_generic_line(std::uint64_t seed) {
  const auto& cs = cs_case9();
  ProfileOutcome out;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const std::uint64_t s = seed + 7919u * static_cast<std::uint64_t>(attempt);
    const SparsePoly section = section_equation_case9(s);
    const SparsePoly alpha =
        random_homogeneous(cs.subsystem({"u0", "u1", "u2"}), 2, subseed(s, 2))
            .lift_to(cs);
    const SparsePoly plane_quintic = section.substitute("v", alpha);
    const SparsePoly line =
        random_homogeneous(cs.subsystem({"u1", "u2"}), 1, subseed(s, 3)).lift_to(cs);
    const SparsePoly cut = plane_quintic.substitute("u0", line);
    const auto prof = binary_profile(cut.to_coords(cs.subsystem({"u1", "u2"})));
    out.multiset = prof.multiset();
    out.form_degree = prof.form_degree;
    out.degree_ok = prof.degree_accounting_ok();
    out.reseeds = attempt;
    if (out.multiset == std::vector<std::int64_t>{1, 1, 1, 1, 1}) break;
    out.note = "reseeded after a non-transverse draw";
  }
  if (out.reseeds > 0 && out.note.empty()) out.note = "reseeded";
  return out;
}

ProfileOutcome profile_case10_tangent(std::uint64_t seed) {
  const CoordSystem cs({"u0", "u1", "v", "s"}, {1, 1, 3, 5});
  const SparsePoly f9 = random_homogeneous(cs, 9, subseed(seed, 1));
  const SparsePoly section =
      coord_times(cs, "u0", f9) + SparsePoly::variable(cs, "s").pow(2);
  const SparsePoly alpha =
      random_homogeneous(cs.subsystem({"u0", "u1"}), 3, subseed(seed, 2)).lift_to(cs);
  const SparsePoly curve = section.substitute("v", alpha);
  const SparsePoly restricted = curve.restrict_hyperplane("u0");
  const auto prof = binary_profile(restricted.to_coords(cs.subsystem({"u1", "s"})));
  return {prof.multiset(), prof.form_degree, prof.degree_accounting_ok(), 0, ""};
}

ProfileOutcome profile_case12_ramification(std::uint64_t seed) {
  const CoordSystem cs({"u0", "u1", "v", "s"}, {1, 1, 3, 4});
  const SparsePoly f8 = random_homogeneous(cs, 8, subseed(seed, 1));
  const SparsePoly section =
      coord_times(cs, "u0", f8) + SparsePoly::variable(cs, "v").pow(3);
  const SparsePoly alpha =
      random_homogeneous(cs.subsystem({"u0", "u1", "v"}), 4, subseed(seed, 2))
          .lift_to(cs);
  const SparsePoly curve = section.substitute("s", alpha);
  const SparsePoly restricted = curve.restrict_hyperplane("u0");
  const auto prof = binary_profile(restricted.to_coords(cs.subsystem({"u1", "v"})));
  return {prof.multiset(), prof.form_degree, prof.degree_accounting_ok(), 0, ""};
}

ProfileOutcome profile_case13_heptuple(std::uint64_t seed) {
  const CoordSystem cs({"u0", "u1", "v", "s"}, {1, 1, 2, 3});
  const SparsePoly f6 = random_homogeneous(cs, 6, subseed(seed, 1));
  const SparsePoly section =
      coord_times(cs, "u0", f6) + SparsePoly::variable(cs, "u1").pow(7);
  const SparsePoly restricted = section.restrict_hyperplane("u0");
  const auto prof = binary_profile(restricted.to_coords(cs.subsystem({"u1", "v"})));
  return {prof.multiset(), prof.form_degree, prof.degree_accounting_ok(), 0, ""};
}

ProfileOutcome profile_case14_fiber(std::uint64_t seed) {
  const auto& cs = cs_case14_sections();
  ProfileOutcome out;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const std::uint64_t s = seed + 7919u * static_cast<std::uint64_t>(attempt);
    const SparsePoly f5 = random_homogeneous(cs, 5, subseed(s, 1));
    const SparsePoly h5 = random_homogeneous(cs, 5, subseed(s, 2));
    const SparsePoly sigma =
        SparsePoly::variable(cs, "v").pow(3) - coord_times(cs, "u1", h5);
    const SparsePoly theta =
        SparsePoly::variable(cs, "w").pow(2) - coord_times(cs, "u0", f5);
    // the fiber u1 = v = 0 lies inside {sigma = 0}
    if (!sigma.restrict_hyperplane("u1").restrict_hyperplane("v").is_zero())
      throw ConsistencyError("fiber is not contained in the first sextic");
    const SparsePoly fiber_form =
        theta.restrict_hyperplane("u1").restrict_hyperplane("v").to_coords(
            cs.subsystem({"u0", "w"}));
    const auto prof = binary_profile(fiber_form);
    out.multiset = prof.multiset();
    out.form_degree = prof.form_degree;
    out.degree_ok = prof.degree_accounting_ok();
    out.reseeds = attempt;
    if (out.multiset == std::vector<std::int64_t>{1, 1}) break;
    out.note = "reseeded after a degenerate fiber intersection";
  }
  return out;
}

ProfileOutcome profile_case14_tritangent(std::uint64_t seed) {
  const auto& cs = cs_case14_sections();
  ProfileOutcome out;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const std::uint64_t s = seed + 7919u * static_cast<std::uint64_t>(attempt);
    const SparsePoly f5 = random_homogeneous(cs, 5, subseed(s, 1));
    const SparsePoly h5 = random_homogeneous(cs, 5, subseed(s, 2));
    const SparsePoly sigma =
        SparsePoly::variable(cs, "v").pow(3) - coord_times(cs, "u1", h5);
    const SparsePoly theta =
        SparsePoly::variable(cs, "w").pow(2) - coord_times(cs, "u0", f5);
    const SparsePoly theta0 = theta.restrict_hyperplane("u0");
    if (theta0 != SparsePoly::variable(cs, "w").pow(2))
      throw ConsistencyError("second sextic does not restrict to a doubled line");
    const std::int64_t doubling = theta0.valuation("w");
    const SparsePoly base =
        sigma.restrict_hyperplane("u0").restrict_hyperplane("w").to_coords(
            cs.subsystem({"u1", "v"}));
    const auto prof = binary_profile(base).scaled(doubling);
    out.multiset = prof.multiset();
    out.form_degree = prof.form_degree;
    out.degree_ok = prof.degree_accounting_ok();
    out.reseeds = attempt;
    if (out.multiset == std::vector<std::int64_t>{2, 2, 2}) break;
    out.note = "reseeded after a non-reduced contact divisor";
  }
  return out;
}

PullbackCheck pullback_case9(std::uint64_t seed) {
  const MonomialMap phi = projection_map(9);
  const SparsePoly section = section_equation_case9(seed);
  const SparsePoly up = pullback(phi, section);
  PullbackCheck out;
  out.contracted_valuation = up.valuation("x");
  out.divisible = out.contracted_valuation >= 5;
  const SparsePoly q = up.divide_power("x", 5);
  const auto deg = q.homogeneous_degree();
  out.quotient_homogeneous = deg.has_value();
  out.quotient_degree = deg.value_or(-1);
  return out;
}

PullbackCheck pullback_case14(std::uint64_t seed) {
  const MonomialMap psi = psi_case14();
  const SparsePoly section = section_equation_case14(seed);
  const SparsePoly up = pullback(psi, section);
  PullbackCheck out;
  out.contracted_valuation = up.valuation("y");
  out.divisible = out.contracted_valuation >= 2;
  const SparsePoly q = up.divide_power("y", 2);
  const auto deg = q.homogeneous_degree();
  out.quotient_homogeneous = deg.has_value();
  out.quotient_degree = deg.value_or(-1);
  return out;
}

}  // namespace gwps3::cases
