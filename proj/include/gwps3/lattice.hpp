#pragma once

#include <cstdint>
#include <vector>

#include "gwps3/numeric.hpp"

namespace gwps3 {

using IntMat = std::vector<std::vector<Int>>;

/// Basis of { v in Z^m : A v = 0 } for an r x m integer matrix A,
/// by unimodular row reduction of [A^T | I_m]. Rows of the result are
/// primitive when the kernel has rank 1.
IntMat integer_kernel_basis(const IntMat& a);

/// A unimodular 4x4 matrix U with U * a = (1,0,0,0)^T for a primitive
/// integer vector a (gcd of entries 1).
IntMat unimodular_clearing(const std::vector<Int>& a);

}  // namespace gwps3
