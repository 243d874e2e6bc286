#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace weylmon {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

RatVec to_rational(const IntVec& v);
RatMat to_rational(const IntMat& a);

bool is_integral(const RatVec& v);
IntVec to_integral(const RatVec& v);

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMat a);

/// Rank over the rationals.
int rational_rank(RatMat a);

/// Column indices of the leftmost maximal independent column set
/// (pivot columns of the row echelon form).
std::vector<int> pivot_columns(RatMat a);

/// One exact solution of a*x = b, or nullopt if inconsistent.
/// Free variables, if any, are set to zero; when the columns of `a` are
/// linearly independent the solution is unique.
std::optional<RatVec> solve_exact(RatMat a, RatVec b);

Rat dot(const RatVec& x, const RatVec& y);

}  // namespace weylmon
