#include "gwps3/classifier.hpp"

#include <algorithm>

#include "gwps3/errors.hpp"

namespace gwps3 {

bool is_well_formed(const WeightedSpace& w) {
  const auto& a = w.weights();
  for (std::size_t drop = 0; drop < a.size(); ++drop) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != drop) g = gcd64(g, a[i]);
    if (g != 1) return false;
  }
  return true;
}

GorensteinInvariants gorenstein_invariants(const WeightedSpace& w) {
  if (w.coord_count() != 4) throw DimensionError("expected 4 weights");
  if (!is_well_formed(w)) throw DomainError("weights are not well-formed");
  const std::int64_t sigma = w.weight_sum();
  for (auto a : w.weights())
    if (sigma % a != 0) throw NotGorensteinError(a);
  return {w.weight_lcm(), sigma, sigma / w.weight_lcm()};
}

std::vector<std::array<std::int64_t, 4>> enumerate_unit_fraction_quadruples() {
  // Work over a common scale to stay in integers: with L = b0*b1*b2,
  // the last entry must satisfy b3 = 1/(1 - 1/b0 - 1/b1 - 1/b2) exactly.
  std::vector<std::array<std::int64_t, 4>> out;
  for (std::int64_t b0 = 2; b0 <= 4; ++b0) {
    // remaining budget 1 - 1/b0 = (b0-1)/b0 must be covered by 3 terms
    for (std::int64_t b1 = b0; b1 * (b0 - 1) <= 3 * b0; ++b1) {
      // r1 = (b0*b1 - b1 - b0) / (b0*b1) left for 2 terms
      const std::int64_t num1 = b0 * b1 - b1 - b0, den1 = b0 * b1;
      if (num1 <= 0) continue;
      for (std::int64_t b2 = b1; b2 * num1 <= 2 * den1; ++b2) {
        const std::int64_t num2 = num1 * b2 - den1, den2 = den1 * b2;
        if (num2 <= 0) continue;
        if (den2 % num2 != 0) continue;
        const std::int64_t b3 = den2 / num2;
        if (b3 >= b2) out.push_back({b0, b1, b2, b3});
      }
    }
  }
  return out;
}

std::vector<ClassifierRawEntry> enumerate_gorenstein_wps3_raw() {
  std::vector<ClassifierRawEntry> out;
  for (const auto& b : enumerate_unit_fraction_quadruples()) {
    std::int64_t N = 1;
    for (auto v : b) N = lcm64(N, v);
    std::vector<std::int64_t> a(4);
    for (int i = 0; i < 4; ++i) a[static_cast<std::size_t>(i)] = N / b[static_cast<std::size_t>(i)];
    std::int64_t g = 0;
    for (auto v : a) g = gcd64(g, v);
    for (auto& v : a) v /= g;
    std::sort(a.begin(), a.end());
    WeightedSpace w(a);
    out.push_back({b, w, is_well_formed(w)});
  }
  return out;
}

std::vector<WeightedSpace> enumerate_gorenstein_wps3() {
  std::vector<WeightedSpace> out;
  for (const auto& entry : enumerate_gorenstein_wps3_raw()) {
    if (!entry.well_formed) continue;
    if (std::find(out.begin(), out.end(), entry.weights) == out.end())
      out.push_back(entry.weights);
  }
  std::sort(out.begin(), out.end(),
            [](const WeightedSpace& x, const WeightedSpace& y) {
              return x.weights() < y.weights();
            });
  if (out.size() != 14)
    throw ConsistencyError("Gorenstein classification size " +
                           std::to_string(out.size()) + ", expected 14");
  return out;
}

bool is_basepoint_free(const WeightedSpace& w, std::int64_t m) {
  if (m < 1) throw DomainError("twist must be positive");
  for (auto a : w.weights())
    if (m % a != 0) return false;
  return true;
}

Int anticanonical_genus(const WeightedSpace& w) {
  if (w.coord_count() != 4) throw DimensionError("expected 4 weights");
  const Int sigma(static_cast<long>(w.weight_sum()));
  Int prod = 1;
  for (auto a : w.weights()) prod *= Int(static_cast<long>(a));
  const Int num = sigma * sigma * sigma;
  const Int den = 2 * prod;
  if (num % den != 0)
    throw ConsistencyError("(-K)^3 = 2g-2 has no integral genus for " +
                           w.label());
  const Int g = 1 + num / den;
  if (g <= 0) throw ConsistencyError("nonpositive genus for " + w.label());
  return g;
}

Int primitive_genus(const Int& g, std::int64_t i) {
  if (i < 1) throw DomainError("polarization index must be positive");
  const Int ii(static_cast<long>(i));
  const Int twice = 2 * (g - 1);
  if (twice % (ii * ii) != 0) throw DomainError("i^2 does not divide 2g-2");
  const Int csq = twice / (ii * ii);  // self-intersection of the primitive class
  if (csq % 2 != 0) throw DomainError("primitive class has odd square");
  return 1 + csq / 2;
}

}  // namespace gwps3
