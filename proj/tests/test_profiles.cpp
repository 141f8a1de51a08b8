#include <doctest.h>

#include <random>

#include "gwps3/errors.hpp"
#include "gwps3/profiles.hpp"

using namespace gwps3;

namespace {

UPoly upoly_mul(const UPoly& f, const UPoly& g) {
  UPoly out(f.size() + g.size() - 1, Rat(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

}  // namespace

TEST_CASE("squarefree decomposition") {
  // (t - 1)^2 (t + 2): multiplicities 1 and 2
  const UPoly lin1{Rat(-1), Rat(1)};
  const UPoly lin2{Rat(2), Rat(1)};
  const UPoly f = upoly_mul(upoly_mul(lin1, lin1), lin2);
  const auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == lin2);
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == lin1);

  // squarefree cubic stays in one block
  const UPoly cubic{Rat(-6), Rat(11), Rat(-6), Rat(1)};  // (t-1)(t-2)(t-3)
  const auto dec2 = squarefree_decomposition(cubic);
  REQUIRE(dec2.size() == 1);
  CHECK(dec2[0].second == 1);
  CHECK(static_cast<int>(dec2[0].first.size()) - 1 == 3);
}

TEST_CASE("binary profiles of coordinate-point forms") {
  const CoordSystem line11({"u1", "u2"}, {1, 1});
  const auto p5 = binary_profile(SparsePoly::variable(line11, "u1").pow(5));
  CHECK(p5.multiset() == std::vector<std::int64_t>{5});
  CHECK(p5.degree_accounting_ok());
  CHECK(p5.entries.size() == 1);
  CHECK(p5.entries[0].location == "coordinate point [0:1]");

  const CoordSystem line13({"u1", "v"}, {1, 3});
  const auto p3 = binary_profile(SparsePoly::variable(line13, "v").pow(3));
  CHECK(p3.multiset() == std::vector<std::int64_t>{3});
  CHECK(p3.degree_accounting_ok());

  const CoordSystem line15({"u1", "s"}, {1, 5});
  const auto p2 = binary_profile(SparsePoly::variable(line15, "s").pow(2));
  CHECK(p2.multiset() == std::vector<std::int64_t>{2});
  CHECK(p2.form_degree == 10);
}

TEST_CASE("binary profile of the fiber form") {
  // w^2 + l u0^3 w + t u0^6 on the (1,3) line with l^2 != 4t: two sheets
  const CoordSystem line({"u0", "w"}, {1, 3});
  const SparsePoly u0 = SparsePoly::variable(line, "u0");
  const SparsePoly w = SparsePoly::variable(line, "w");
  const SparsePoly f = w.pow(2) + (u0.pow(3) * w).scaled(Rat(1)) + u0.pow(6).scaled(Rat(1));
  // discriminant 1 - 4 != 0
  const auto prof = binary_profile(f);
  CHECK(prof.multiset() == std::vector<std::int64_t>{1, 1});
  CHECK(prof.degree_accounting_ok());

  // degenerate square (l^2 == 4t): one doubled sheet
  const SparsePoly sq = w.pow(2) + (u0.pow(3) * w).scaled(Rat(2)) + u0.pow(6).scaled(Rat(1));
  CHECK(binary_profile(sq).multiset() == std::vector<std::int64_t>{2});
}

TEST_CASE("binary profile rejects bad input") {
  const CoordSystem line({"x", "y"}, {1, 3});
  CHECK_THROWS_AS(binary_profile(SparsePoly::zero(line)), DomainError);
  const CoordSystem noncoprime({"x", "y"}, {2, 4});
  CHECK_THROWS_AS(binary_profile(SparsePoly::variable(noncoprime, "x")), DomainError);
  const SparsePoly mixed =
      SparsePoly::variable(line, "x") + SparsePoly::variable(line, "y");
  CHECK_THROWS_AS(binary_profile(mixed), HomogeneityError);
}

TEST_CASE("degree accounting on random forms") {
  std::mt19937_64 rng(2024);
  const std::vector<std::pair<std::int64_t, std::int64_t>> lines = {
      {1, 1}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 5}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto [a, b] = lines[rng() % lines.size()];
    const CoordSystem line({"x", "y"}, {a, b});
    // choose a degree that is guaranteed to support monomials
    const std::int64_t d = a * b * (1 + static_cast<std::int64_t>(rng() % 4)) +
                           a * static_cast<std::int64_t>(rng() % 3);
    const SparsePoly f = random_homogeneous(line, d, rng());
    if (f.is_zero()) continue;
    const auto prof = binary_profile(f);
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(d);
    CHECK(prof.degree_accounting_ok());
    CHECK(prof.form_degree == d);
  }
}

TEST_CASE("scaled profiles") {
  const CoordSystem line({"u1", "v"}, {1, 2});
  const SparsePoly u1 = SparsePoly::variable(line, "u1");
  const SparsePoly v = SparsePoly::variable(line, "v");
  // v^3 - u1^2 v^2: valuation 2 at the coordinate point plus a simple point
  const SparsePoly f = v.pow(3) - u1.pow(2) * v.pow(2);
  const auto prof = binary_profile(f);
  CHECK(prof.multiset() == std::vector<std::int64_t>{2, 1});
  const auto doubled = prof.scaled(2);
  CHECK(doubled.multiset() == std::vector<std::int64_t>{4, 2});
  CHECK(doubled.degree_accounting_ok());
}

TEST_CASE("plane curve genus") {
  CHECK(plane_curve_genus(6, {3}).genus == 7);
  CHECK(plane_curve_genus(6, {1}).genus == 9);
  CHECK(plane_curve_genus(6, {2}).genus == 8);
  CHECK(plane_curve_genus(5, {}).genus == 6);
  CHECK_FALSE(plane_curve_genus(5, {}).flagged);
  const auto overloaded = plane_curve_genus(3, {5});
  CHECK(overloaded.flagged);
  CHECK(overloaded.genus == -4);
  CHECK_THROWS_AS(plane_curve_genus(0, {}), DomainError);
  CHECK_THROWS_AS(plane_curve_genus(4, {-1}), DomainError);
}
