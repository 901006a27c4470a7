#include "opreduce/polymatrix.hpp"

#include <algorithm>
#include <unordered_map>

#include "opreduce/errors.hpp"

namespace opreduce {

PolyMatrix::PolyMatrix(int n) : n_(n) {
  if (n < 1) throw InputError("polynomial matrix size must be at least 1");
  e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Polynomial{});
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(Rational(1));
  return m;
}

PolyMatrix PolyMatrix::from_scalar(const Matrix& m) {
  PolyMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (!m.at(i, j).is_zero()) out.at(i, j) = Polynomial::constant(m.at(i, j));
    }
  }
  return out;
}

PolyMatrix PolyMatrix::characteristic(const Matrix& b) {
  const int n = b.size();
  PolyMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> c{-b.at(i, j)};
      if (i == j) c.push_back(Rational(1));
      out.at(i, j) = Polynomial(std::move(c));
    }
  }
  return out;
}

std::size_t PolyMatrix::idx(int r, int c) const {
  if (r < 0 || r >= n_ || c < 0 || c >= n_) throw InputError("polynomial matrix index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n_ != o.n_) throw InputError("polynomial matrix size mismatch in multiplication");
  PolyMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Polynomial& f = at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + f * o.at(k, j);
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (n_ != o.n_) throw InputError("polynomial matrix size mismatch in subtraction");
  PolyMatrix out(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& p : e_) {
    if (!p.is_zero()) d = std::max(d, *p.degree());
  }
  return d;
}

bool PolyMatrix::is_constant() const { return max_degree() <= 0; }

Matrix PolyMatrix::coefficient_matrix(int k) const {
  Matrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(i, j).coeff(k);
  }
  return out;
}

namespace {

// det over remaining rows r..n-1 and the columns listed in `mask`.
Polynomial det_expand(const PolyMatrix& a, int r, unsigned mask,
                      std::unordered_map<unsigned, Polynomial>& memo) {
  const int n = a.size();
  if (r == n) return Polynomial::constant(Rational(1));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  Polynomial acc;
  int pos = 0;
  for (int c = 0; c < n; ++c) {
    if (!(mask & (1u << c))) continue;
    const Polynomial& entry = a.at(r, c);
    if (!entry.is_zero()) {
      Polynomial sub = det_expand(a, r + 1, mask & ~(1u << c), memo);
      Polynomial term = entry * sub;
      acc = (pos % 2 == 0) ? acc + term : acc - term;
    }
    ++pos;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

Polynomial determinant(const PolyMatrix& a) {
  const int n = a.size();
  if (n > 24) throw InputError("polynomial determinant limited to matrices of size <= 24");
  std::unordered_map<unsigned, Polynomial> memo;
  const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1u);
  return det_expand(a, 0, full, memo);
}

Matrix right_value(const PolyMatrix& f, const Matrix& c) {
  if (f.size() != c.size()) throw InputError("size mismatch in polynomial matrix evaluation");
  const int d = f.max_degree();
  Matrix acc(f.size());
  if (d < 0) return acc;
  for (int k = d; k >= 0; --k) {
    acc = acc * c + f.coefficient_matrix(k);
  }
  return acc;
}

}  // namespace opreduce
