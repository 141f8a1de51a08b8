#include "gwps3/grading.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gwps3 {

std::int64_t weighted_degree(const ExpVec& e, const WeightedSpace& w) {
  if (e.size() != w.coord_count())
    throw DimensionError("exponent vector length does not match the space");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w.weight(i);
  return d;
}

bool exp_less(const ExpVec& a, const ExpVec& b, const WeightedSpace& w) {
  std::int64_t da = weighted_degree(a, w), db = weighted_degree(b, w);
  if (da != db) return da < db;
  return a < b;
}

std::vector<ExpVec> monomials_of_degree_serial(const WeightedSpace& w,
                                               std::int64_t d) {
  std::vector<ExpVec> out;
  for_each_monomial(w, d, [&](const ExpVec& e) { out.push_back(e); });
  return out;
}

Int count_by_enumeration_serial(const WeightedSpace& w, std::int64_t d) {
  unsigned long long c = 0;
  for_each_monomial(w, d, [&](const ExpVec&) { ++c; });
  return Int(static_cast<unsigned long>(c));
}

std::vector<ExpVec> monomials_of_degree(const WeightedSpace& w,
                                        std::int64_t d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  const auto& a = w.weights();
  const std::size_t n = a.size();
  if (n < 2 || d < 512) return monomials_of_degree_serial(w, d);

  const std::int64_t kmax = d / a[0];
  std::vector<std::vector<ExpVec>> blocks(static_cast<std::size_t>(kmax) + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k <= kmax; ++k) {
    const std::int64_t rem = d - k * a[0];
    auto& blk = blocks[static_cast<std::size_t>(k)];
    ExpVec e(n, 0);
    e[0] = k;
    auto rec = [&](auto&& self, std::size_t i, std::int64_t r) -> void {
      if (i == n - 1) {
        if (r % a[i] == 0) {
          e[i] = r / a[i];
          blk.push_back(e);
        }
        return;
      }
      for (std::int64_t t = 0; t * a[i] <= r; ++t) {
        e[i] = t;
        self(self, i + 1, r - t * a[i]);
      }
      e[i] = 0;
    };
    rec(rec, 1, rem);
  }
  std::vector<ExpVec> out;
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  out.reserve(total);
  for (auto& b : blocks)
    out.insert(out.end(), std::make_move_iterator(b.begin()),
               std::make_move_iterator(b.end()));
  return out;
}

Int count_by_enumeration(const WeightedSpace& w, std::int64_t d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  const auto& a = w.weights();
  const std::size_t n = a.size();
  if (n < 2 || d < 512) return count_by_enumeration_serial(w, d);

  const std::int64_t kmax = d / a[0];
  Int total = 0;
#pragma omp parallel
  {
    unsigned long long local = 0;
#pragma omp for schedule(dynamic) nowait
    for (std::int64_t k = 0; k <= kmax; ++k) {
      const std::int64_t rem = d - k * a[0];
      auto rec = [&](auto&& self, std::size_t i, std::int64_t r) -> void {
        if (i == n - 1) {
          if (r % a[i] == 0) ++local;
          return;
        }
        for (std::int64_t t = 0; t * a[i] <= r; ++t)
          self(self, i + 1, r - t * a[i]);
      };
      rec(rec, 1, rem);
    }
#pragma omp critical
    total += Int(static_cast<unsigned long>(local));
  }
  return total;
}

Int hilbert_count(const WeightedSpace& w, std::int64_t d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  return hilbert_table(w, d).back();
}

std::vector<Int> hilbert_table(const WeightedSpace& w, std::int64_t dmax) {
  if (dmax < 0) throw DomainError("degree must be nonnegative");
  std::vector<Int> f(static_cast<std::size_t>(dmax) + 1, Int(0));
  f[0] = 1;
  for (auto a : w.weights())
    for (std::int64_t r = a; r <= dmax; ++r)
      f[static_cast<std::size_t>(r)] += f[static_cast<std::size_t>(r - a)];
  return f;
}

}  // namespace gwps3
