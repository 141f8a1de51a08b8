#include <doctest.h>

#include "gwps3/errors.hpp"
#include "gwps3/grading.hpp"
#include "gwps3/veronese.hpp"

using namespace gwps3;

namespace {

std::vector<ExpVec> monomials_of(const std::vector<VeroneseGenerator>& gens) {
  std::vector<ExpVec> out;
  for (const auto& g : gens) out.push_back(g.monomial);
  return out;
}

std::vector<std::int64_t> weights_of(const std::vector<VeroneseGenerator>& gens) {
  std::vector<std::int64_t> out;
  for (const auto& g : gens) out.push_back(g.target_weight);
  return out;
}

std::vector<std::string> names_of(const std::vector<VeroneseGenerator>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

}  // namespace

TEST_CASE("generators of the degree-5 subring of P(1,4,5,10)") {
  const auto gens = veronese_generators(WeightedSpace({1, 4, 5, 10}), 5);
  CHECK(monomials_of(gens) == std::vector<ExpVec>{{5, 0, 0, 0},
                                                  {1, 1, 0, 0},
                                                  {0, 0, 1, 0},
                                                  {0, 0, 0, 1},
                                                  {0, 5, 0, 0}});
  CHECK(weights_of(gens) == std::vector<std::int64_t>{1, 1, 1, 2, 4});
  CHECK(names_of(gens) == std::vector<std::string>{"u0", "u1", "u2", "v", "s"});
}

TEST_CASE("generators of the degree-3 subring of P(2,3,10,15)") {
  const auto gens = veronese_generators(WeightedSpace({2, 3, 10, 15}), 3);
  CHECK(monomials_of(gens) == std::vector<ExpVec>{{0, 1, 0, 0},
                                                  {3, 0, 0, 0},
                                                  {1, 0, 1, 0},
                                                  {0, 0, 0, 1},
                                                  {0, 0, 3, 0}});
  CHECK(weights_of(gens) == std::vector<std::int64_t>{1, 2, 4, 5, 10});
  CHECK(names_of(gens) == std::vector<std::string>{"u", "v", "s", "t", "r"});
}

TEST_CASE("identity embedding") {
  const auto gens = veronese_generators(WeightedSpace({1, 1, 1, 1}), 1);
  CHECK(gens.size() == 4);
  CHECK(weights_of(gens) == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("toric relations") {
  const WeightedSpace w({1, 4, 5, 10});
  const auto gens = veronese_generators(w, 5);
  const auto rels = toric_relations(gens, w);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].lhs == ExpVec{1, 0, 0, 0, 1});
  CHECK(rels[0].rhs == ExpVec{0, 5, 0, 0, 0});
  CHECK(rels[0].degree == 5);

  const WeightedSpace one({1});
  const auto single = veronese_generators(one, 1);
  REQUIRE(single.size() == 1);
  CHECK(toric_relations(single, one).empty());
}

TEST_CASE("hypersurface models") {
  const auto m10 = embed_as_hypersurface(WeightedSpace({1, 2, 6, 9}), 2);
  CHECK(m10.target.weights() == std::vector<std::int64_t>{1, 1, 3, 5, 9});
  CHECK(m10.relation_text() == "u0 t = s^2");
  CHECK(m10.relation_degree == 10);
  CHECK(m10.degree_label() == "10-ic");

  const auto m13 = embed_as_hypersurface(WeightedSpace({1, 6, 14, 21}), 7);
  CHECK(m13.target.weights() == std::vector<std::int64_t>{1, 1, 2, 3, 6});
  CHECK(m13.relation_text() == "u0 t = u1^7");
  CHECK(m13.relation_degree == 7);
  CHECK(m13.degree_label() == "heptic");

  const auto m12 = embed_as_hypersurface(WeightedSpace({1, 3, 8, 12}), 3);
  CHECK(m12.target.weights() == std::vector<std::int64_t>{1, 1, 3, 4, 8});
  CHECK(m12.relation_text() == "u0 t = v^3");
  CHECK(m12.degree_label() == "9-ic");
}

TEST_CASE("codimension-2 image of the degree-6 subring of P(2,3,10,15)") {
  try {
    embed_as_hypersurface(WeightedSpace({2, 3, 10, 15}), 6);
    FAIL("expected NotHypersurfaceError");
  } catch (const NotHypersurfaceError& e) {
    CHECK(e.generator_weights == std::vector<std::int64_t>{1, 1, 2, 3, 5, 5});
  }
  const auto gens = veronese_generators(WeightedSpace({2, 3, 10, 15}), 6);
  CHECK(monomials_of(gens) == std::vector<ExpVec>{{3, 0, 0, 0},
                                                  {0, 2, 0, 0},
                                                  {1, 0, 1, 0},
                                                  {0, 1, 0, 1},
                                                  {0, 0, 3, 0},
                                                  {0, 0, 0, 2}});
  const auto emb = veronese_embedding(WeightedSpace({2, 3, 10, 15}), 6);
  CHECK(emb.relations.size() == 2);
  CHECK_FALSE(emb.relations_certified_minimal);
  // both defining equations of the codimension-2 model, in the fixed order
  CHECK(emb.relations[0].degree == 6);
  CHECK(emb.relations[1].degree == 6);
}

TEST_CASE("classical quadratic embedding of projective 3-space is not a hypersurface") {
  try {
    embed_as_hypersurface(WeightedSpace({1, 1, 1, 1}), 2);
    FAIL("expected NotHypersurfaceError");
  } catch (const NotHypersurfaceError& e) {
    CHECK(e.generator_weights.size() == 10);
  }
}

TEST_CASE("generator minimality: dropping any generator breaks closure") {
  const WeightedSpace w({1, 4, 5, 10});
  const auto gens = veronese_generators(w, 5);
  for (std::size_t drop = 0; drop < gens.size(); ++drop) {
    std::vector<VeroneseGenerator> reduced;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != drop) reduced.push_back(gens[i]);
    ExpVec bad;
    CHECK_FALSE(closure_scan_serial(w, 5, reduced, 1, 2 * w.weight_lcm(), &bad));
  }
}

TEST_CASE("closure scans agree between serial and parallel kernels") {
  const WeightedSpace w({1, 6, 14, 21});
  const auto gens = veronese_generators(w, 7);
  ExpVec bad_serial, bad_omp;
  CHECK(closure_scan_serial(w, 7, gens, 43, 84, &bad_serial));
  CHECK(closure_scan(w, 7, gens, 43, 84, &bad_omp));

  // remove the top generator: both kernels must report the same first gap
  std::vector<VeroneseGenerator> reduced(gens.begin(), gens.end() - 1);
  const bool s = closure_scan_serial(w, 7, reduced, 1, 84, &bad_serial);
  const bool p = closure_scan(w, 7, reduced, 1, 84, &bad_omp);
  CHECK_FALSE(s);
  CHECK_FALSE(p);
  CHECK(bad_serial == bad_omp);
}

TEST_CASE("relations are homogeneous in the target grading") {
  for (auto [wts, n] : std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
           {{1, 4, 5, 10}, 5}, {{1, 2, 6, 9}, 2}, {{1, 2, 3, 6}, 2},
           {{2, 3, 10, 15}, 3}, {{2, 3, 10, 15}, 2}}) {
    const WeightedSpace w(wts);
    const auto emb = veronese_embedding(w, n);
    for (const auto& rel : emb.relations) {
      std::int64_t lhs = 0, rhs = 0;
      for (std::size_t i = 0; i < emb.generators.size(); ++i) {
        lhs += rel.lhs[i] * emb.generators[i].target_weight;
        rhs += rel.rhs[i] * emb.generators[i].target_weight;
      }
      CHECK(lhs == rel.degree);
      CHECK(rhs == rel.degree);
      // the two sides induce the same source monomial
      ExpVec src_l(w.coord_count(), 0), src_r(w.coord_count(), 0);
      for (std::size_t i = 0; i < emb.generators.size(); ++i)
        for (std::size_t k = 0; k < w.coord_count(); ++k) {
          src_l[k] += rel.lhs[i] * emb.generators[i].monomial[k];
          src_r[k] += rel.rhs[i] * emb.generators[i].monomial[k];
        }
      CHECK(src_l == src_r);
    }
  }
}

TEST_CASE("alternative degree-2 model of case 14") {
  const auto model = embed_as_hypersurface(WeightedSpace({2, 3, 10, 15}), 2);
  CHECK(model.target.weights() == std::vector<std::int64_t>{1, 3, 5, 9, 15});
  CHECK(model.relation_text() == "v r = t^2");
  CHECK(model.relation_degree == 18);
}
