#include "eqc/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace eqc {

namespace {

// Fraction-free (Bareiss) echelon rank over 128-bit integers.  Applicable
// when every entry is a small integer and the Hadamard bound keeps all
// intermediate minors within range; returns -1 when the input does not
// qualify.  Exact, so the result equals the rational rank.
int bareiss_rank(const RatMat& m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<__int128>> a(rows);
  double log_bound = 0;
  for (int r = 0; r < rows; ++r) {
    a[r].resize(cols);
    double sumsq = 0;
    for (int c = 0; c < cols; ++c) {
      const Rat& x = m[r][c];
      if (boost::multiprecision::denominator(x) != 1) return -1;
      const auto& num = boost::multiprecision::numerator(x);
      if (num > 1000000 || num < -1000000) return -1;
      long long v = num.convert_to<long long>();
      a[r][c] = v;
      sumsq += static_cast<double>(v) * static_cast<double>(v);
    }
    if (sumsq > 0) log_bound += 0.5 * std::log2(sumsq);
  }
  // every Bareiss entry is a minor of the input, bounded by Hadamard
  if (log_bound > 120) return -1;

  int rank = 0;
  __int128 prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j)
        a[r][j] = (a[r][j] * a[rank][c] - a[r][c] * a[rank][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

int rat_rank(RatMat m) {
  int fast = bareiss_rank(m);
  if (fast >= 0) return fast;
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rat inv = m[rank][c];
    for (int j = c; j < cols; ++j) m[rank][j] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

int nullspace_dim(const RatMat& m, int cols) {
  return cols - rat_rank(m);
}

bool in_span(const RatMat& basis, const RatVec& v) {
  RatMat with = basis;
  with.push_back(v);
  return rat_rank(std::move(with)) == rat_rank(basis);
}

}  // namespace eqc
