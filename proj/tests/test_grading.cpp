#include <doctest.h>

#include <numeric>

#include "gwps3/classifier.hpp"
#include "gwps3/errors.hpp"
#include "gwps3/grading.hpp"

using namespace gwps3;

namespace {

// brute-force oracle independent of the library enumeration
long long quadruple_loop_count(long long a0, long long a1, long long a2, long long a3,
                               long long d) {
  long long n = 0;
  for (long long e0 = 0; e0 * a0 <= d; ++e0)
    for (long long e1 = 0; e0 * a0 + e1 * a1 <= d; ++e1)
      for (long long e2 = 0; e0 * a0 + e1 * a1 + e2 * a2 <= d; ++e2) {
        const long long rem = d - e0 * a0 - e1 * a1 - e2 * a2;
        if (rem % a3 == 0) ++n;
      }
  return n;
}

}  // namespace

TEST_CASE("weighted degree") {
  const WeightedSpace w({1, 4, 5, 10});
  CHECK(weighted_degree({5, 0, 0, 0}, w) == 5);
  CHECK(weighted_degree({0, 0, 0, 0}, w) == 0);
  CHECK(weighted_degree({0, 1, 0, 1}, w) == 14);
  CHECK_THROWS_AS(weighted_degree({1, 0, 0}, w), DimensionError);
}

TEST_CASE("weighted degree is additive") {
  const WeightedSpace w({1, 2, 3, 6});
  const ExpVec e1{3, 1, 0, 2}, e2{0, 4, 1, 1};
  ExpVec sum(4);
  for (int i = 0; i < 4; ++i) sum[static_cast<size_t>(i)] = e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
  CHECK(weighted_degree(sum, w) == weighted_degree(e1, w) + weighted_degree(e2, w));
}

TEST_CASE("monomial enumeration") {
  CHECK(monomials_of_degree(WeightedSpace({1, 1, 1, 3}), 1).size() == 3);
  // frozen from the quadruple-loop oracle: solutions of a+4b+5c+10d = 20
  CHECK(quadruple_loop_count(1, 4, 5, 10, 20) == 23);
  CHECK(monomials_of_degree(WeightedSpace({1, 4, 5, 10}), 20).size() == 23);
  CHECK(monomials_of_degree(WeightedSpace({1, 2, 3, 6}), 12).size() == 27);
  CHECK_THROWS_AS(monomials_of_degree(WeightedSpace({1, 1}), -1), DomainError);
}

TEST_CASE("enumeration output is strictly increasing and matches the serial kernel") {
  const WeightedSpace w({1, 2, 6, 9});
  for (std::int64_t d : {0, 7, 18, 40}) {
    const auto mono = monomials_of_degree(w, d);
    const auto serial = monomials_of_degree_serial(w, d);
    CHECK(mono == serial);
    for (std::size_t i = 0; i + 1 < mono.size(); ++i) {
      CHECK(exp_less(mono[i], mono[i + 1], w));
      CHECK(mono[i] < mono[i + 1]);
    }
    for (const auto& e : mono) CHECK(weighted_degree(e, w) == d);
  }
}

TEST_CASE("parallel kernels agree with serial references on large inputs") {
  const WeightedSpace w({1, 6, 14, 21});
  CHECK(monomials_of_degree(w, 700) == monomials_of_degree_serial(w, 700));
  CHECK(count_by_enumeration(w, 700) == count_by_enumeration_serial(w, 700));
  CHECK(count_by_enumeration(w, 700) == hilbert_count(w, 700));
}

TEST_CASE("hilbert counts") {
  CHECK(hilbert_count(WeightedSpace({1, 1, 1, 3}), 5) == 27);
  CHECK(hilbert_count(WeightedSpace({1, 1, 1, 1}), 1) == 4);
  CHECK(quadruple_loop_count(1, 2, 6, 9, 18) == 30);
  CHECK(hilbert_count(WeightedSpace({1, 2, 6, 9}), 18) == 30);
  CHECK(hilbert_count(WeightedSpace({1, 2, 3, 6}), 12) == 27);
  CHECK_THROWS_AS(hilbert_count(WeightedSpace({1, 2}), -3), DomainError);
}

TEST_CASE("count vs enumeration agreement up to degree 60 on the whole classification") {
  for (const auto& w : enumerate_gorenstein_wps3()) {
    const auto table = hilbert_table(w, 60);
    for (std::int64_t d = 0; d <= 60; ++d) {
      CAPTURE(w.label());
      CAPTURE(d);
      CHECK(table[static_cast<std::size_t>(d)] ==
            Int(static_cast<long>(monomials_of_degree(w, d).size())));
    }
  }
}

TEST_CASE("weighted space validation") {
  CHECK_THROWS_AS(WeightedSpace({2, 4, 6, 8}), DomainError);
  CHECK_THROWS_AS(WeightedSpace({0, 1, 1, 1}), DomainError);
  CHECK(WeightedSpace({1, 1, 1, 2}).label() == "P(1^3,2)");
  CHECK(WeightedSpace({2, 3, 10, 15}).label() == "P(2,3,10,15)");
  CHECK(WeightedSpace({5, 4, 1, 10}).sorted().weights() == std::vector<std::int64_t>{1, 4, 5, 10});
  const DivisorClass twenty{20};
  CHECK(twenty.is_cartier(WeightedSpace({1, 4, 5, 10})));
  const DivisorClass twelve{12};
  CHECK_FALSE(twelve.is_cartier(WeightedSpace({1, 2, 4, 5})));
}
