#pragma once

#include "opreduce/matrix.hpp"
#include "opreduce/polynomial.hpp"

namespace opreduce {

/// Characteristic polynomial of B with the coefficient of x^(n-k) equal to
/// (-1)^k times the sum of the order-k principal minors of B.
Polynomial charpoly_via_minors(const Matrix& b);

/// Characteristic polynomial by the Faddeev-LeVerrier trace recursion.
/// Independent of the principal-minor route; the two never call each other.
Polynomial charpoly_faddeev(const Matrix& b);

/// The delta_k values themselves, k = 1..n, as used by the minor route.
std::vector<Rational> principal_minor_sums(const Matrix& b);

}  // namespace opreduce
