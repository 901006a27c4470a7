#include "opreduce/canonical.hpp"

#include <optional>
#include <utility>

#include "opreduce/errors.hpp"

namespace opreduce {

Matrix companion(const Polynomial& p) {
  if (!p.is_monic()) throw InputError("companion matrix requires a monic polynomial");
  const int n = *p.degree();
  if (n < 1) throw InputError("companion matrix requires degree >= 1");
  Matrix c(n);
  for (int i = 0; i + 1 < n; ++i) c.at(i, i + 1) = Rational(1);
  for (int j = 0; j < n; ++j) c.at(n - 1, j) = -p.coeff(j);
  return c;
}

namespace {

// Working state for the Smith reduction. Row operations act on s and u and
// are mirrored inversely on u_inv (as column operations); column operations
// act on s and v and are mirrored inversely on v_inv (as row operations),
// so u*a*v = s, u*u_inv = I and v*v_inv = I hold at every step.
struct SnfWork {
  PolyMatrix s, u, v, u_inv, v_inv;
  int n;

  explicit SnfWork(const PolyMatrix& a)
      : s(a),
        u(PolyMatrix::identity(a.size())),
        v(PolyMatrix::identity(a.size())),
        u_inv(PolyMatrix::identity(a.size())),
        v_inv(PolyMatrix::identity(a.size())),
        n(a.size()) {}

  void swap_rows(int r1, int r2) {
    for (int c = 0; c < n; ++c) {
      std::swap(s.at(r1, c), s.at(r2, c));
      std::swap(u.at(r1, c), u.at(r2, c));
    }
    for (int r = 0; r < n; ++r) std::swap(u_inv.at(r, r1), u_inv.at(r, r2));
  }

  void swap_cols(int c1, int c2) {
    for (int r = 0; r < n; ++r) {
      std::swap(s.at(r, c1), s.at(r, c2));
      std::swap(v.at(r, c1), v.at(r, c2));
    }
    for (int c = 0; c < n; ++c) std::swap(v_inv.at(c1, c), v_inv.at(c2, c));
  }

  // row_dst += q * row_src
  void add_row_multiple(int dst, int src, const Polynomial& q) {
    for (int c = 0; c < n; ++c) {
      s.at(dst, c) = s.at(dst, c) + q * s.at(src, c);
      u.at(dst, c) = u.at(dst, c) + q * u.at(src, c);
    }
    for (int r = 0; r < n; ++r) u_inv.at(r, src) = u_inv.at(r, src) - q * u_inv.at(r, dst);
  }

  // col_dst += q * col_src
  void add_col_multiple(int dst, int src, const Polynomial& q) {
    for (int r = 0; r < n; ++r) {
      s.at(r, dst) = s.at(r, dst) + q * s.at(r, src);
      v.at(r, dst) = v.at(r, dst) + q * v.at(r, src);
    }
    for (int c = 0; c < n; ++c) v_inv.at(src, c) = v_inv.at(src, c) - q * v_inv.at(dst, c);
  }

  void scale_row(int r, const Rational& f) {
    const Rational g = Rational(1) / f;
    for (int c = 0; c < n; ++c) {
      s.at(r, c) = s.at(r, c).scaled(f);
      u.at(r, c) = u.at(r, c).scaled(f);
    }
    for (int rr = 0; rr < n; ++rr) u_inv.at(rr, r) = u_inv.at(rr, r).scaled(g);
  }
};

// Nonzero entry of minimal degree in s[t.., t..]; ties broken by smallest
// (row, column). This pins the elimination order, making transforms
// reproducible run to run.
std::optional<std::pair<int, int>> find_pivot(const PolyMatrix& s, int t) {
  std::optional<std::pair<int, int>> best;
  int best_deg = -1;
  for (int r = t; r < s.size(); ++r) {
    for (int c = t; c < s.size(); ++c) {
      const Polynomial& e = s.at(r, c);
      if (e.is_zero()) continue;
      const int d = *e.degree();
      if (!best || d < best_deg) {
        best = {r, c};
        best_deg = d;
      }
    }
  }
  return best;
}

}  // namespace

SmithResult smith_normal_form(const PolyMatrix& a) {
  SnfWork w(a);
  const int n = w.n;
  const Polynomial one = Polynomial::constant(Rational(1));

  for (int t = 0; t < n; ++t) {
    for (;;) {
      auto pivot = find_pivot(w.s, t);
      if (!pivot) {
        // Remaining submatrix is zero; the rest of the diagonal stays zero.
        t = n;
        break;
      }
      auto [pr, pc] = *pivot;
      if (pr != t) w.swap_rows(t, pr);
      if (pc != t) w.swap_cols(t, pc);
      w.scale_row(t, Rational(1) / w.s.at(t, t).leading());

      bool clean = true;
      for (int r = t + 1; r < n; ++r) {
        if (w.s.at(r, t).is_zero()) continue;
        auto [q, rem] = Polynomial::divmod(w.s.at(r, t), w.s.at(t, t));
        w.add_row_multiple(r, t, -q);
        if (!rem.is_zero()) clean = false;
      }
      for (int c = t + 1; c < n; ++c) {
        if (w.s.at(t, c).is_zero()) continue;
        auto [q, rem] = Polynomial::divmod(w.s.at(t, c), w.s.at(t, t));
        w.add_col_multiple(c, t, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;  // smaller-degree entries appeared, re-pick pivot

      // The pivot must divide everything in the remaining submatrix;
      // pulling an offending row up makes a smaller remainder reachable.
      bool fixed = false;
      for (int i = t + 1; i < n && !fixed; ++i) {
        for (int j = t + 1; j < n && !fixed; ++j) {
          if (w.s.at(i, j).is_zero()) continue;
          if (!Polynomial::divmod(w.s.at(i, j), w.s.at(t, t)).second.is_zero()) {
            w.add_row_multiple(t, i, one);
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (t == n) break;
  }

  return SmithResult{std::move(w.s), std::move(w.u), std::move(w.v),
                     std::move(w.u_inv), std::move(w.v_inv)};
}

Matrix RcfResult::canonical_matrix() const {
  std::vector<Matrix> mats;
  mats.reserve(blocks.size());
  for (const auto& b : blocks) mats.push_back(companion(b.poly));
  return block_diagonal(mats);
}

RcfResult rational_canonical_form(const Matrix& b) {
  const int n = b.size();
  const PolyMatrix lam_b = PolyMatrix::characteristic(b);
  const SmithResult sb = smith_normal_form(lam_b);

  RcfResult out;
  out.n = n;
  int total = 0;
  for (int i = 0; i < n; ++i) {
    const Polynomial& si = sb.s.at(i, i);
    if (si.is_zero()) {
      throw InternalError("Smith form of the characteristic matrix has a zero invariant factor");
    }
    const int d = *si.degree();
    if (d == 0) continue;  // unit factor, dropped
    out.offsets.push_back(total);
    out.blocks.push_back(CompanionBlock{si, d});
    total += d;
  }
  if (total != n) {
    throw InternalError("invariant factor degrees do not sum to the matrix size");
  }

  const Matrix c = out.canonical_matrix();

  // x*I - C = u_c_inv * u_b * (x*I - B) * v_b * v_c_inv, so the right
  // transform is v_b * v_c_inv and its right value at C conjugates B to C.
  const SmithResult sc = smith_normal_form(PolyMatrix::characteristic(c));
  if (!(sc.s == sb.s)) {
    throw InternalError("canonical form does not reproduce the invariant factors of B");
  }
  const PolyMatrix v_prime = sb.v * sc.v_inv;
  out.p = right_value(v_prime, c);
  try {
    out.p_inv = inverse(out.p);
  } catch (const SingularMatrixError&) {
    throw InternalError("recovered canonical transform is singular");
  }

  // Verified construction: every claimed invariant is checked exactly.
  for (std::size_t i = 0; i + 1 < out.blocks.size(); ++i) {
    if (!out.blocks[i].poly.divides(out.blocks[i + 1].poly)) {
      throw InternalError("invariant factor divisibility chain is broken");
    }
  }
  if (!(out.p * out.p_inv == Matrix::identity(n))) {
    throw InternalError("canonical transform inverse check failed");
  }
  if (!(out.p_inv * b * out.p == c)) {
    throw InternalError("canonical transform does not conjugate B onto its canonical form");
  }
  Polynomial product = Polynomial::constant(Rational(1));
  for (const auto& blk : out.blocks) product = product * blk.poly;
  if (!(product == determinant(lam_b))) {
    throw InternalError("block polynomials do not multiply to the characteristic polynomial");
  }

  return out;
}

}  // namespace opreduce
