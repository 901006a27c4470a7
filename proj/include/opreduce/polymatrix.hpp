#pragma once

#include <vector>

#include "opreduce/matrix.hpp"
#include "opreduce/polynomial.hpp"

namespace opreduce {

/// Square matrix with polynomial entries, used for x*I - B and the
/// unimodular transforms of its Smith normal form.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n);
  static PolyMatrix identity(int n);
  static PolyMatrix from_scalar(const Matrix& m);
  /// x*I - B.
  static PolyMatrix characteristic(const Matrix& b);

  int size() const { return n_; }
  Polynomial& at(int r, int c) { return e_[idx(r, c)]; }
  const Polynomial& at(int r, int c) const { return e_[idx(r, c)]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const = default;

  /// Largest entry degree, or -1 for the zero matrix.
  int max_degree() const;
  /// True when every entry has degree <= 0.
  bool is_constant() const;
  /// The matrix of coefficients of x^k across all entries.
  Matrix coefficient_matrix(int k) const;

 private:
  std::size_t idx(int r, int c) const;
  int n_ = 0;
  std::vector<Polynomial> e_;
};

/// Exact determinant by cofactor expansion with memoization on column
/// subsets. Serves as the symbolic route to det(x*I - B).
Polynomial determinant(const PolyMatrix& a);

/// Right value of F at C: sum of F_k * C^k, where F_k is the coefficient
/// matrix of x^k and the powers of C multiply from the right.
Matrix right_value(const PolyMatrix& f, const Matrix& c);

}  // namespace opreduce
