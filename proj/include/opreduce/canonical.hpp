#pragma once

#include <vector>

#include "opreduce/matrix.hpp"
#include "opreduce/polymatrix.hpp"
#include "opreduce/polynomial.hpp"

namespace opreduce {

/// Companion matrix of a monic polynomial of degree >= 1: ones on the
/// superdiagonal, (-d_n, ..., -d_1) in the last row, zeros elsewhere,
/// for p(x) = x^n + d_1 x^(n-1) + ... + d_n.
Matrix companion(const Polynomial& p);

/// One block of a rational canonical form.
struct CompanionBlock {
  Polynomial poly;  // monic, degree >= 1
  int size = 0;     // == degree(poly)
  bool operator==(const CompanionBlock& o) const = default;
};

/// Smith normal form over Q[x]: u * a * v = s with s diagonal, diagonal
/// entries monic (units normalized to 1) and each dividing the next.
/// u and v are unimodular; their exact inverses are tracked alongside.
struct SmithResult {
  PolyMatrix s, u, v, u_inv, v_inv;
};

SmithResult smith_normal_form(const PolyMatrix& a);

/// Rational canonical form of B together with an explicit transform:
/// p_inv * B * p equals the block diagonal of the companion blocks.
/// Construction is verified before returning; see rational_canonical_form.
struct RcfResult {
  int n = 0;
  std::vector<CompanionBlock> blocks;
  std::vector<int> offsets;  // offsets[i] = sum of earlier block sizes
  Matrix p, p_inv;

  Matrix canonical_matrix() const;
};

/// Computes the canonical form via the Smith normal form of x*I - B. The
/// transform P is recovered by right-evaluating the column transform that
/// carries x*I - B onto x*I - C, then every invariant (block divisibility,
/// P * P_inv = I, P_inv * B * P = C, product of block polynomials equal to
/// the characteristic polynomial) is checked exactly; any failure throws
/// InternalError rather than returning a wrong answer.
RcfResult rational_canonical_form(const Matrix& b);

}  // namespace opreduce
