#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gwps3/errors.hpp"
#include "gwps3/poly.hpp"

using namespace gwps3;

namespace {

const CoordSystem& quintic_coords() {
  static const CoordSystem cs({"u0", "u1", "u2", "v"}, {1, 1, 1, 2});
  return cs;
}

SparsePoly var(const CoordSystem& cs, const std::string& n) {
  return SparsePoly::variable(cs, n);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("arithmetic and term bookkeeping") {
  const auto& cs = quintic_coords();
  const SparsePoly x = var(cs, "u0"), y = var(cs, "u1");
  const SparsePoly sq = (x + y) * (x + y);
  CHECK(sq.term_count() == 3);
  CHECK(sq == x * x + x * y.scaled(Rat(2)) + y * y);
  CHECK((sq - sq).is_zero());
  CHECK(x.pow(0) == SparsePoly::constant(cs, Rat(1)));
  // zero coefficients are never stored
  const SparsePoly cancel = x + x.scaled(Rat(-1));
  CHECK(cancel.is_zero());
  CHECK(cancel.term_count() == 0);
}

TEST_CASE("weighted homogeneity detection") {
  const auto& cs = quintic_coords();
  const SparsePoly f4 = random_homogeneous(cs, 4, 11);
  const SparsePoly section = var(cs, "u0") * f4 + var(cs, "u1").pow(5);
  CHECK(section.homogeneous_degree() == 5);
  CHECK_FALSE(SparsePoly::zero(cs).homogeneous_degree().has_value());
  CHECK(SparsePoly::zero(cs).is_zero());
  const SparsePoly mixed = var(cs, "u0") + var(cs, "v");
  CHECK_FALSE(mixed.homogeneous_degree().has_value());
  CHECK_FALSE(mixed.is_zero());
}

TEST_CASE("substitution") {
  const auto& cs = quintic_coords();
  const SparsePoly f4 = random_homogeneous(cs, 4, 5);
  const SparsePoly section = var(cs, "u0") * f4 + var(cs, "u1").pow(5);
  const SparsePoly alpha =
      random_homogeneous(cs.subsystem({"u0", "u1", "u2"}), 2, 7).lift_to(cs);
  const SparsePoly quintic = section.substitute("v", alpha);
  CHECK(quintic.homogeneous_degree() == 5);
  CHECK(quintic.valuation("v") >= 1 - 1);  // v no longer appears
  for (const auto& [e, c] : quintic.terms()) CHECK(e[3] == 0);

  // substituting a variable by itself is the identity
  CHECK(section.substitute("v", var(cs, "v")) == section);

  CHECK_THROWS_AS(section.substitute("v", var(cs, "u0")), HomogeneityError);

  const CoordSystem c12({"u0", "u1", "v", "s"}, {1, 1, 3, 4});
  const SparsePoly f8 = random_homogeneous(c12, 8, 3);
  const SparsePoly s9 = SparsePoly::variable(c12, "u0") * f8 +
                        SparsePoly::variable(c12, "v").pow(3);
  const SparsePoly a4 =
      random_homogeneous(c12.subsystem({"u0", "u1", "v"}), 4, 9).lift_to(c12);
  const SparsePoly curve = s9.substitute("s", a4);
  CHECK(curve.homogeneous_degree() == 9);
  for (const auto& [e, c] : curve.terms()) CHECK(e[3] == 0);
}

TEST_CASE("hyperplane restriction") {
  const auto& cs = quintic_coords();
  const SparsePoly f4 = random_homogeneous(cs, 4, 21);
  const SparsePoly section = var(cs, "u0") * f4 + var(cs, "u1").pow(5);
  CHECK(section.restrict_hyperplane("u0") == var(cs, "u1").pow(5));

  const CoordSystem c13({"u0", "u1", "v", "s"}, {1, 1, 2, 3});
  const SparsePoly f6 = random_homogeneous(c13, 6, 4);
  const SparsePoly heptic = SparsePoly::variable(c13, "u0") * f6 +
                            SparsePoly::variable(c13, "u1").pow(7);
  CHECK(heptic.restrict_hyperplane("u0") ==
        SparsePoly::variable(c13, "u1").pow(7));

  const SparsePoly divisible = var(cs, "u0") * f4;
  CHECK(divisible.restrict_hyperplane("u0").is_zero());
}

TEST_CASE("valuation and exact monomial division") {
  const auto& cs = quintic_coords();
  const SparsePoly p = var(cs, "u0").pow(3) * var(cs, "u1") +
                       var(cs, "u0").pow(5);
  CHECK(p.valuation("u0") == 3);
  CHECK(p.valuation("u1") == 0);
  const SparsePoly q = p.divide_power("u0", 3);
  CHECK(q == var(cs, "u1") + var(cs, "u0").pow(2));
  CHECK_THROWS_AS(p.divide_power("u0", 4), DomainError);
  CHECK_THROWS_AS(SparsePoly::zero(cs).valuation("u0"), DomainError);
}

TEST_CASE("coordinate projection and lifting") {
  const auto& cs = quintic_coords();
  const SparsePoly p = var(cs, "u1").pow(5);
  const CoordSystem line = cs.subsystem({"u1", "u2"});
  const SparsePoly q = p.to_coords(line);
  CHECK(q.coords().names == std::vector<std::string>{"u1", "u2"});
  CHECK(q.homogeneous_degree() == 5);
  CHECK(q.lift_to(cs) == p);
  CHECK_THROWS_AS(var(cs, "u0").to_coords(line), DomainError);
}

TEST_CASE("text round trip and golden restriction files") {
  const auto& cs = quintic_coords();
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const SparsePoly p = random_homogeneous(cs, 4, seed) -
                         random_homogeneous(cs, 4, seed + 17);
    CHECK(SparsePoly::parse(p.text()) == p);
  }
  CHECK(SparsePoly::parse(SparsePoly::zero(cs).text()).is_zero());

  const SparsePoly g9 =
      SparsePoly::parse(slurp(std::string(GWPS3_DATA_DIR) + "/sections/case9_restriction.txt"));
  CHECK(g9.coords().weights == std::vector<std::int64_t>{1, 1});
  CHECK(g9 == SparsePoly::variable(g9.coords(), "u1").pow(5));
}

TEST_CASE("seeded random forms") {
  const auto& cs = quintic_coords();
  CHECK(random_homogeneous(cs, 4, 42) == random_homogeneous(cs, 4, 42));
  CHECK(random_homogeneous(cs, 4, 42) != random_homogeneous(cs, 4, 43));
  CHECK(random_homogeneous(cs, 4, 1).term_count() == 22);
  const SparsePoly c = random_homogeneous(cs, 0, 9);
  CHECK(c.term_count() == 1);
  CHECK(c.homogeneous_degree() == 0);
}
