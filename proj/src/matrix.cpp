#include "opreduce/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "opreduce/errors.hpp"

namespace opreduce {

Matrix::Matrix(int n) : n_(n) {
  if (n < 1) throw InputError("matrix size must be at least 1");
  e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
}

Matrix::Matrix(int n, std::vector<Rational> row_major) : n_(n), e_(std::move(row_major)) {
  if (n < 1) throw InputError("matrix size must be at least 1");
  if (e_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InputError("matrix entry count does not match its size");
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::size_t Matrix::idx(int r, int c) const {
  if (r < 0 || r >= n_ || c < 0 || c >= n_) throw InputError("matrix index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (n_ != o.n_) throw InputError("matrix size mismatch in addition");
  Matrix out(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (n_ != o.n_) throw InputError("matrix size mismatch in subtraction");
  Matrix out(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (n_ != o.n_) throw InputError("matrix size mismatch in multiplication");
  Matrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Rational& f = at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += f * o.at(k, j);
    }
  }
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out = *this;
  for (auto& x : out.e_) x *= c;
  return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != n_) throw InputError("vector length does not match matrix size");
  std::vector<Rational> out(static_cast<std::size_t>(n_), Rational(0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  }
  return out;
}

Rational Matrix::trace() const {
  Rational t(0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < n_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == n_ ? "]" : "\n");
  }
  return os.str();
}

Rational determinant(const Matrix& m) {
  const int n = m.size();
  Matrix w = m;
  Rational prev(1);
  int sign = 1;
  // Bareiss one-step elimination; every division below is exact.
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (!w.at(r, k).is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = Rational(0);
    }
    prev = w.at(k, k);
  }
  Rational det = w.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

Matrix inverse(const Matrix& m) {
  const int n = m.size();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) {
      throw SingularMatrixError("matrix is singular (determinant = 0), cannot invert");
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(col, c), a.at(pivot, c));
        std::swap(inv.at(col, c), inv.at(pivot, c));
      }
    }
    const Rational f = Rational(1) / a.at(col, col);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= f;
      inv.at(col, c) *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const Rational g = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= g * a.at(col, c);
        inv.at(r, c) -= g * inv.at(col, c);
      }
    }
  }
  return inv;
}

namespace {

Matrix select_principal(const Matrix& m, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  Matrix out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out.at(i, j) = m.at(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  return out;
}

// Calls fn for every sorted k-subset of {0, ..., n-1}.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Rational principal_minor_sum(const Matrix& m, int k) {
  const int n = m.size();
  if (k < 1 || k > n) throw InputError("principal minor order out of range");
  Rational total(0);
  for_each_subset(n, k, [&](const std::vector<int>& idx) {
    total += determinant(select_principal(m, idx));
  });
  return total;
}

Rational principal_minor_sum_through_column(const Matrix& m, int k, int column) {
  const int n = m.size();
  if (k < 1 || k > n) throw InputError("principal minor order out of range");
  if (column < 1 || column > n) throw InputError("column index out of range");
  const int fixed = column - 1;
  Rational total(0);
  // Enumerate (k-1)-subsets of the remaining indices and splice in `fixed`.
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i < n; ++i) {
    if (i != fixed) rest.push_back(i);
  }
  for_each_subset(n - 1, k - 1, [&](const std::vector<int>& sub) {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(k));
    idx.push_back(fixed);
    for (int s : sub) idx.push_back(rest[static_cast<std::size_t>(s)]);
    std::sort(idx.begin(), idx.end());
    total += determinant(select_principal(m, idx));
  });
  return total;
}

Matrix substitute_column(const Matrix& m, int column, const std::vector<Rational>& v) {
  const int n = m.size();
  if (column < 1 || column > n) throw InputError("column index out of range");
  if (static_cast<int>(v.size()) != n) throw InputError("substituted column has wrong length");
  Matrix out = m;
  for (int r = 0; r < n; ++r) out.at(r, column - 1) = v[static_cast<std::size_t>(r)];
  return out;
}

Matrix eval_at_matrix(const Polynomial& p, const Matrix& b) {
  const int n = b.size();
  Matrix acc(n);
  if (p.is_zero()) return acc;
  for (int k = *p.degree(); k >= 0; --k) {
    acc = acc * b;
    for (int i = 0; i < n; ++i) acc.at(i, i) += p.coeff(k);
  }
  return acc;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.size();
  if (n == 0) throw InputError("block_diagonal needs at least one block");
  Matrix out(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size(); ++i) {
      for (int j = 0; j < b.size(); ++j) out.at(off + i, off + j) = b.at(i, j);
    }
    off += b.size();
  }
  return out;
}

}  // namespace opreduce
