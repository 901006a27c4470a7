#pragma once

#include <vector>

#include "opreduce/canonical.hpp"
#include "opreduce/matrix.hpp"
#include "opreduce/polynomial.hpp"

namespace opreduce {

/// Closed form for the sum of order-k principal minors through the first
/// column of a matrix with first column b, ones on the superdiagonal and
/// (b_n, a_{n-1}, ..., a_1) as its last row:
///   (-1)^k * (sum_{j=1}^{k-1} b_j * a_{k-j}  -  b_k),   1 <= k <= n.
/// For k = 1 the empty sum leaves b_1.
Rational delta_k1_closed_form(const std::vector<Rational>& b,
                              const std::vector<Rational>& a, int k);

/// Materializes that matrix shape (the transpose of a doubly companion
/// matrix); the brute-force minor enumeration on it is the oracle the
/// closed form is tested against.
Matrix doubly_companion_transpose(const std::vector<Rational>& b,
                                  const std::vector<Rational>& a);

/// Coefficient table of the right-hand side of a block's higher-order
/// equation over the formal basis A^m(psi_j): coeff[m][j-1] multiplies
/// A^m applied to the block-local psi_j. Triangular: coeff[m][j-1] = 0
/// whenever j > block_size - m, and the leading diagonal entries are 1.
struct RhsTable {
  int block_size = 0;
  std::vector<std::vector<Rational>> coeff;  // [m][j-1], m in 0..block_size-1

  const Rational& at(int power, int local_index) const;  // local_index 1-based
  bool operator==(const RhsTable& o) const = default;
};

/// Builds the table for a monic block polynomial p of degree >= 1:
/// coeff[n_i - k][j - 1] = d_{k-j} with d_0 = 1, for 1 <= j <= k <= n_i.
RhsTable rhs_table(const Polynomial& p);

/// One block of a partially reduced system: the higher-order equation
/// Delta(A)(y_{offset+1}) = RHS plus size-1 first-order chain equations
/// y_{offset+m+1} = A(y_{offset+m}) - psi_{offset+m}.
struct Subsystem {
  int offset = 0;  // sum of the sizes of earlier blocks
  Polynomial poly;
  RhsTable rhs;

  int size() const { return rhs.block_size; }
  int chain_count() const { return rhs.block_size - 1; }
  bool operator==(const Subsystem& o) const = default;
};

struct ReducedSystem {
  int n = 0;
  Matrix p, p_inv;
  std::vector<Subsystem> subsystems;

  bool operator==(const ReducedSystem& o) const = default;
};

/// Full partial reduction of the system with matrix B: canonical form,
/// one subsystem per companion block, transform carried along so callers
/// can map phi -> psi = P^-1 * phi and y -> x = P * y.
ReducedSystem partially_reduce(const Matrix& b);

/// Same, reusing an already computed canonical form.
ReducedSystem partially_reduce(const RcfResult& rcf);

}  // namespace opreduce
