#pragma once

#include <random>
#include <vector>

#include "opreduce/canonical.hpp"
#include "opreduce/matrix.hpp"
#include "opreduce/polynomial.hpp"
#include "opreduce/rational.hpp"

namespace opreduce::testutil {

/// Deterministic generator for randomized property tests. Entries are
/// small integers so minor enumeration stays fast and values stay exact.
struct TestRng {
  std::mt19937_64 rng;

  explicit TestRng(unsigned long long seed) : rng(seed) {}

  int int_in(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
  }

  Rational scalar(int lo = -5, int hi = 5) { return Rational(int_in(lo, hi)); }

  Rational nonzero_scalar(int lo = -5, int hi = 5) {
    for (;;) {
      Rational v = scalar(lo, hi);
      if (!v.is_zero()) return v;
    }
  }

  std::vector<Rational> vec(int n, int lo = -5, int hi = 5) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(scalar(lo, hi));
    return out;
  }

  Matrix matrix(int n, int lo = -5, int hi = 5) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = scalar(lo, hi);
    return m;
  }

  Polynomial poly(int deg, int lo = -5, int hi = 5) {
    std::vector<Rational> c = vec(deg + 1, lo, hi);
    while (c.back().is_zero()) c.back() = scalar(lo, hi);
    return Polynomial(std::move(c));
  }

  Polynomial monic_poly(int deg, int lo = -5, int hi = 5) {
    std::vector<Rational> c = vec(deg, lo, hi);
    c.push_back(Rational(1));
    return Polynomial(std::move(c));
  }

  /// Unimodular integer matrix: a product of row shears and swaps applied
  /// to the identity. Its inverse is again an integer matrix, so
  /// conjugating an integer matrix by it stays integral.
  Matrix unimodular(int n, int ops = 12) {
    Matrix m = Matrix::identity(n);
    for (int k = 0; k < ops; ++k) {
      int i = int_in(0, n - 1);
      int j = int_in(0, n - 1);
      if (i == j) continue;
      if (int_in(0, 3) == 0) {
        for (int c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
      } else {
        Rational f = scalar(-2, 2);
        for (int c = 0; c < n; ++c) m.at(i, c) += f * m.at(j, c);
      }
    }
    return m;
  }

  /// Matrix with a prescribed canonical block structure: the block
  /// diagonal of companion matrices conjugated by a random unimodular
  /// integer matrix. polys must be monic and form a divisibility chain.
  Matrix with_blocks(const std::vector<Polynomial>& polys) {
    std::vector<Matrix> blocks;
    blocks.reserve(polys.size());
    for (const auto& p : polys) blocks.push_back(companion(p));
    Matrix d = block_diagonal(blocks);
    Matrix t = unimodular(d.size());
    return t * d * inverse(t);
  }

  /// Divisibility chain of monic polynomials with the given degrees
  /// (ascending): each next polynomial is the previous times a monic
  /// cofactor of the degree difference.
  std::vector<Polynomial> divisibility_chain(const std::vector<int>& degrees) {
    std::vector<Polynomial> out;
    Polynomial cur = Polynomial::constant(Rational(1));
    int prev = 0;
    for (int d : degrees) {
      cur = cur * monic_poly(d - prev, -3, 3);
      prev = d;
      out.push_back(cur);
    }
    return out;
  }
};

}  // namespace opreduce::testutil
