#pragma once

// Exact integer and rational linear algebra used for lattice computations.
// Inputs are small dense matrices; entries are promoted to arbitrary precision
// before elimination so intermediate growth never overflows.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flowtri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Rank over the rationals of the row set.
std::size_t rank(const IntMatrix& rows);

/// Rank of the affine hull of a point set (number of points minus one when independent).
std::size_t affine_rank(const IntMatrix& points);

/// Rows p_i - p_0 for i >= 1.
IntMatrix difference_rows(const IntMatrix& points);

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
/// The count equals the rank of the matrix.
std::vector<BigInt> elementary_divisors(const IntMatrix& rows);

/// Affine coordinates of `target` with respect to affinely independent `points`:
/// lambda with sum(lambda) = 1 and sum(lambda_i * points_i) = target.
/// Returns nullopt when `target` lies outside the affine hull.
/// Throws ConsistencyError when the points are affinely dependent.
std::optional<std::vector<Rational>> affine_coordinates(const IntMatrix& points,
                                                        const IntVector& target);

std::int64_t dot(const IntVector& a, const IntVector& b);

/// Binomial coefficient for small non-negative arguments.
std::int64_t binomial(int n, int k);

}  // namespace flowtri
