#pragma once

#include <vector>

#include "opreduce/polynomial.hpp"
#include "opreduce/rational.hpp"

namespace opreduce {

/// Square matrix over Rational, row-major, entry access 0-based. The
/// principal-minor and column-substitution helpers below take 1-based
/// column indices to match the usual notation for those quantities.
class Matrix {
 public:
  Matrix() = default;  // empty placeholder; real matrices have size >= 1
  explicit Matrix(int n);
  Matrix(int n, std::vector<Rational> row_major);
  static Matrix identity(int n);

  int size() const { return n_; }
  Rational& at(int r, int c) { return e_[idx(r, c)]; }
  const Rational& at(int r, int c) const { return e_[idx(r, c)]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  Rational trace() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

  std::string str() const;

 private:
  std::size_t idx(int r, int c) const;
  int n_ = 0;
  std::vector<Rational> e_;
};

/// Exact determinant by fraction-free elimination.
Rational determinant(const Matrix& m);

/// Exact inverse; throws SingularMatrixError when the determinant is zero.
Matrix inverse(const Matrix& m);

/// Sum of all order-k principal minors, 1 <= k <= n.
Rational principal_minor_sum(const Matrix& m, int k);

/// Sum of the order-k principal minors whose index set contains the given
/// column (1-based). Enumeration is the reference semantics.
Rational principal_minor_sum_through_column(const Matrix& m, int k, int column);

/// Copy of m with the given column (1-based) replaced by v.
Matrix substitute_column(const Matrix& m, int column, const std::vector<Rational>& v);

/// p(B), evaluated with Horner's scheme over matrices.
Matrix eval_at_matrix(const Polynomial& p, const Matrix& b);

Matrix block_diagonal(const std::vector<Matrix>& blocks);

}  // namespace opreduce
