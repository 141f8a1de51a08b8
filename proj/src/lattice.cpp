#include "gwps3/lattice.hpp"

#include "gwps3/errors.hpp"

namespace gwps3 {

namespace {

// Unimodular row operation making m[q][col] zero using m[p][col].
void clear_entry(IntMat& m, std::size_t p, std::size_t q, std::size_t col) {
  const Int a = m[p][col], b = m[q][col];
  if (b == 0) return;
  const XGcd x = xgcd(a, b);
  const Int au = a / x.g, bu = b / x.g;
  for (std::size_t j = 0; j < m[p].size(); ++j) {
    const Int rp = x.s * m[p][j] + x.t * m[q][j];
    const Int rq = -bu * m[p][j] + au * m[q][j];
    m[p][j] = rp;
    m[q][j] = rq;
  }
}

}  // namespace

IntMat integer_kernel_basis(const IntMat& a) {
  const std::size_t r = a.size();
  if (r == 0) throw DomainError("empty matrix");
  const std::size_t m = a[0].size();
  // Rows of work are [column j of A | e_j]; reduce the A^T block.
  IntMat work(m, std::vector<Int>(r + m, Int(0)));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i].size() != m) throw DomainError("ragged matrix");
      work[j][i] = a[i][j];
    }
    work[j][r + j] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && work[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(work[row], work[pivot]);
    for (std::size_t q = row + 1; q < m; ++q) clear_entry(work, row, q, col);
    ++row;
  }
  IntMat kernel;
  for (std::size_t q = row; q < m; ++q) {
    std::vector<Int> v(work[q].begin() + static_cast<std::ptrdiff_t>(r), work[q].end());
    kernel.push_back(std::move(v));
  }
  return kernel;
}

IntMat unimodular_clearing(const std::vector<Int>& a) {
  const std::size_t n = a.size();
  IntMat m(n, std::vector<Int>(n + 1, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][0] = a[i];
    m[i][i + 1] = 1;
  }
  for (std::size_t q = 1; q < n; ++q) clear_entry(m, 0, q, 0);
  if (m[0][0] < 0)
    for (auto& v : m[0]) v = -v;
  if (m[0][0] != 1) throw DomainError("vector is not primitive");
  IntMat u(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i][j] = m[i][j + 1];
  return u;
}

}  // namespace gwps3
