#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace eqc {

// Exact rational linear algebra for the brute-force fixed-space oracles.
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

int rat_rank(RatMat m);
// Dimension of the solution space of M v = 0.
int nullspace_dim(const RatMat& m, int cols);
// Is v in the row span of basis?
bool in_span(const RatMat& basis, const RatVec& v);

}  // namespace eqc
