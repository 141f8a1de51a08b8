#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gwps3/classifier.hpp"
#include "gwps3/errors.hpp"
#include "gwps3/intersect.hpp"
#include "gwps3/reference_data.hpp"

using namespace gwps3;

TEST_CASE("well-formedness") {
  CHECK(is_well_formed(WeightedSpace({1, 4, 5, 10})));
  CHECK_FALSE(is_well_formed(WeightedSpace({2, 4, 5, 6}).sorted()));
  CHECK(is_well_formed(WeightedSpace({2, 3, 10, 15})));
}

TEST_CASE("Gorenstein invariants") {
  CHECK(gorenstein_invariants(WeightedSpace({1, 1, 4, 6})) ==
        GorensteinInvariants{12, 12, 1});
  CHECK(gorenstein_invariants(WeightedSpace({1, 1, 2, 2})) ==
        GorensteinInvariants{2, 6, 3});
  try {
    gorenstein_invariants(WeightedSpace({1, 2, 4, 5}));
    FAIL("expected NotGorensteinError");
  } catch (const NotGorensteinError& e) {
    CHECK(e.offending_weight == 5);
  }
  CHECK_THROWS_AS(gorenstein_invariants(WeightedSpace({1, 1, 1})), DimensionError);
}

TEST_CASE("unit fraction quadruples") {
  const auto quads = enumerate_unit_fraction_quadruples();
  CHECK(quads.size() == 14);
  auto contains = [&](std::array<std::int64_t, 4> q) {
    for (const auto& x : quads)
      if (x == q) return true;
    return false;
  };
  CHECK(contains({2, 3, 7, 42}));
  CHECK(contains({4, 4, 4, 4}));
  for (const auto& q : quads) {
    Rat sum(0);
    for (auto b : q) sum += make_rat(1, static_cast<long>(b));
    CHECK(sum == 1);
    CHECK(q[0] <= q[1]);
    CHECK(q[1] <= q[2]);
    CHECK(q[2] <= q[3]);
  }
}

TEST_CASE("classification enumeration") {
  const auto spaces = enumerate_gorenstein_wps3();
  REQUIRE(spaces.size() == 14);
  auto contains = [&](std::vector<std::int64_t> w) {
    for (const auto& s : spaces)
      if (s.weights() == w) return true;
    return false;
  };
  CHECK(contains({1, 6, 14, 21}));
  CHECK(contains({2, 3, 3, 4}));
  for (std::size_t i = 0; i + 1 < spaces.size(); ++i)
    CHECK(spaces[i].weights() < spaces[i + 1].weights());
  for (const auto& w : spaces) {
    const auto inv = gorenstein_invariants(w);
    CHECK(inv.index * inv.l == inv.sigma);
    CHECK(is_well_formed(w));
    CHECK(is_basepoint_free(w, w.weight_lcm()));
  }
}

TEST_CASE("raw enumeration keeps quadruple provenance") {
  const auto raw = enumerate_gorenstein_wps3_raw();
  CHECK(raw.size() == 14);
  bool found = false;
  for (const auto& e : raw)
    if (e.quadruple == std::array<std::int64_t, 4>{2, 3, 7, 42}) {
      found = true;
      CHECK(e.weights.weights() == std::vector<std::int64_t>{1, 6, 14, 21});
      CHECK(e.well_formed);
    }
  CHECK(found);
}

TEST_CASE("base-point freeness") {
  CHECK(is_basepoint_free(WeightedSpace({1, 1, 1, 2, 4}), 4));
  CHECK_FALSE(is_basepoint_free(WeightedSpace({1, 1, 3, 5, 9}), 9));
  CHECK(is_basepoint_free(WeightedSpace({1, 2, 4, 5, 10}), 20));
  CHECK_THROWS_AS(is_basepoint_free(WeightedSpace({1, 2}), 0), DomainError);
}

TEST_CASE("anticanonical genus") {
  CHECK(anticanonical_genus(WeightedSpace({1, 4, 5, 10})) == 21);
  CHECK(anticanonical_genus(WeightedSpace({2, 3, 10, 15})) == 16);
  // brute route on projective space: (-K)^3 = 4^3 = 64 = 2g-2
  const WeightedSpace p3({1, 1, 1, 1});
  const Rat cube = top_intersection(p3, {4, 4, 4});
  CHECK(cube == 64);
  CHECK(anticanonical_genus(p3) == 1 + cube.get_num() / 2);
  CHECK(anticanonical_genus(p3) == 33);
}

TEST_CASE("primitive genus") {
  CHECK(primitive_genus(Int(21), 2) == 6);
  CHECK(primitive_genus(Int(28), 3) == 4);
  CHECK(primitive_genus(Int(22), 1) == 22);
  CHECK_THROWS_AS(primitive_genus(Int(22), 3), DomainError);
}

TEST_CASE("reference data loads and cross-validates") {
  const auto& ref = builtin_reference_data();
  CHECK(ref.classification.size() == 14);
  CHECK(ref.cases.size() == 6);
  const auto& c9 = ref.case_row(9);
  CHECK(c9.weights.weights() == std::vector<std::int64_t>{1, 4, 5, 10});
  CHECK(c9.i_s == 2);
  CHECK(c9.g == 21);
  CHECK(c9.g_c == 6);
  CHECK(c9.alpha == 4);
  CHECK(c9.dim_y == 5);
  CHECK(c9.sing_s == "A1, 2A4");
  CHECK(ref.classification_row(11).extension == "itself");
  CHECK_FALSE(ref.classification_row(11).extendable);

  const auto file = load_reference_file(std::string(GWPS3_DATA_DIR) + "/reference_cases.txt");
  CHECK(file.cases.size() == ref.cases.size());
  for (int id = 9; id <= 14; ++id)
    CHECK(file.case_row(id).weights == ref.case_row(id).weights);
}

TEST_CASE("reference data parse errors carry line numbers") {
  // missing version header
  CHECK_THROWS_AS(parse_reference_data_string("# no version here\n", "t"), ParseError);

  // a wrong genus is rejected with the offending source position
  std::string text =
      "# test data, version 1\n"
      "# section: classification\n";
  for (int id = 1; id <= 14; ++id) {
    const auto& row = builtin_reference_data().classification_row(id);
    text += std::to_string(id) + " | " + row.weights.csv() + " | " +
            (row.extendable ? "yes" : "no") + " | " + row.extension + "\n";
  }
  text += "# section: polarizations\n";
  text += "9 | 2 | 99 | 6 | 4 | 5 | A1\n";
  text += "10 | 3 | 28 | 4 | 3 | 4 | A2\n";
  text += "11 | 2 | 25 | 7 | 2 | 3 | A2\n";
  text += "12 | 2 | 25 | 7 | 3 | 4 | A3\n";
  text += "13 | 1 | 22 | 22 | 3 | 4 | A6\n";
  text += "14 | 1 | 16 | 16 | 4 | 5 | A4\n";
  try {
    parse_reference_data_string(text, "tampered");
    FAIL("expected ParseError for the fake genus");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("tampered:") != std::string::npos);
    CHECK(std::string(e.what()).find("stated g=99") != std::string::npos);
  }
}
