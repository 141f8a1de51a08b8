#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace gwps3 {

// Exact arithmetic backend. Counts, genera and intersection numbers are
// arbitrary precision; weights and exponents stay machine integers.
using Int = mpz_class;
using Rat = mpq_class;

using ExpVec = std::vector<std::int64_t>;

inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return std::lcm(a, b);
}

// g = gcd(a,b) together with s,t such that s*a + t*b = g.
struct XGcd {
  Int g, s, t;
};

inline XGcd xgcd(const Int& a, const Int& b) {
  XGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace gwps3
