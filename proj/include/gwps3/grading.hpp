#pragma once

#include <cstdint>
#include <vector>

#include "gwps3/errors.hpp"
#include "gwps3/numeric.hpp"
#include "gwps3/weighted_space.hpp"

namespace gwps3 {

std::int64_t weighted_degree(const ExpVec& e, const WeightedSpace& w);

/// Project-wide total order on exponent vectors: weighted degree first,
/// then plain lexicographic comparison of the exponent tuple.
bool exp_less(const ExpVec& a, const ExpVec& b, const WeightedSpace& w);

/// Visit every exponent vector of weighted degree exactly d, in ascending
/// lexicographic order. Serial reference kernel.
template <class Fn>
void for_each_monomial(const std::vector<std::int64_t>& a, std::int64_t d,
                       Fn&& fn) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  const std::size_t n = a.size();
  ExpVec e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t rem) -> void {
    if (i == n - 1) {
      if (rem % a[i] == 0) {
        e[i] = rem / a[i];
        fn(static_cast<const ExpVec&>(e));
      }
      return;
    }
    for (std::int64_t k = 0; k * a[i] <= rem; ++k) {
      e[i] = k;
      self(self, i + 1, rem - k * a[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
}

template <class Fn>
void for_each_monomial(const WeightedSpace& w, std::int64_t d, Fn&& fn) {
  for_each_monomial(w.weights(), d, static_cast<Fn&&>(fn));
}

std::vector<ExpVec> monomials_of_degree_serial(const WeightedSpace& w,
                                               std::int64_t d);
Int count_by_enumeration_serial(const WeightedSpace& w, std::int64_t d);

/// OpenMP kernels; results are identical to the serial references
/// (same order, same values) for any thread count.
std::vector<ExpVec> monomials_of_degree(const WeightedSpace& w, std::int64_t d);
Int count_by_enumeration(const WeightedSpace& w, std::int64_t d);

/// Number of monomials of weighted degree d, by exact integer dynamic
/// programming over the coordinates (no enumeration).
Int hilbert_count(const WeightedSpace& w, std::int64_t d);

/// hilbert_count for every degree 0..dmax in one DP sweep.
std::vector<Int> hilbert_table(const WeightedSpace& w, std::int64_t dmax);

}  // namespace gwps3
