#include "opreduce/reduction.hpp"

#include "opreduce/errors.hpp"

namespace opreduce {

Rational delta_k1_closed_form(const std::vector<Rational>& b,
                              const std::vector<Rational>& a, int k) {
  const int n = static_cast<int>(b.size());
  if (n < 1) throw InputError("first column must have at least one entry");
  if (static_cast<int>(a.size()) != n - 1) {
    throw InputError("last-row tail must have exactly n-1 entries");
  }
  if (k < 1 || k > n) throw InputError("minor order out of range");
  Rational sum(0);
  for (int j = 1; j <= k - 1; ++j) {
    sum += b[static_cast<std::size_t>(j - 1)] * a[static_cast<std::size_t>(k - j - 1)];
  }
  sum -= b[static_cast<std::size_t>(k - 1)];
  return (k % 2 == 0) ? sum : -sum;
}

Matrix doubly_companion_transpose(const std::vector<Rational>& b,
                                  const std::vector<Rational>& a) {
  const int n = static_cast<int>(b.size());
  if (n < 1) throw InputError("first column must have at least one entry");
  if (static_cast<int>(a.size()) != n - 1) {
    throw InputError("last-row tail must have exactly n-1 entries");
  }
  Matrix m(n);
  for (int r = 0; r < n; ++r) m.at(r, 0) = b[static_cast<std::size_t>(r)];
  for (int r = 0; r + 1 < n; ++r) m.at(r, r + 1) = Rational(1);
  for (int c = 1; c < n; ++c) m.at(n - 1, c) = a[static_cast<std::size_t>(n - 1 - c)];
  return m;
}

const Rational& RhsTable::at(int power, int local_index) const {
  if (power < 0 || power >= block_size || local_index < 1 || local_index > block_size) {
    throw InputError("rhs table index out of range");
  }
  return coeff[static_cast<std::size_t>(power)][static_cast<std::size_t>(local_index - 1)];
}

RhsTable rhs_table(const Polynomial& p) {
  if (!p.is_monic()) throw InputError("rhs table requires a monic block polynomial");
  const int s = *p.degree();
  if (s < 1) throw InputError("rhs table requires degree >= 1");
  // d_k is the coefficient of x^(s-k); d_0 = 1.
  auto d = [&](int k) { return k == 0 ? Rational(1) : p.coeff(s - k); };
  RhsTable t;
  t.block_size = s;
  t.coeff.assign(static_cast<std::size_t>(s),
                 std::vector<Rational>(static_cast<std::size_t>(s), Rational(0)));
  for (int k = 1; k <= s; ++k) {
    for (int j = 1; j <= k; ++j) {
      t.coeff[static_cast<std::size_t>(s - k)][static_cast<std::size_t>(j - 1)] = d(k - j);
    }
  }
  return t;
}

ReducedSystem partially_reduce(const RcfResult& rcf) {
  ReducedSystem out;
  out.n = rcf.n;
  out.p = rcf.p;
  out.p_inv = rcf.p_inv;
  out.subsystems.reserve(rcf.blocks.size());
  for (std::size_t i = 0; i < rcf.blocks.size(); ++i) {
    out.subsystems.push_back(Subsystem{rcf.offsets[i], rcf.blocks[i].poly,
                                       rhs_table(rcf.blocks[i].poly)});
  }
  return out;
}

ReducedSystem partially_reduce(const Matrix& b) {
  return partially_reduce(rational_canonical_form(b));
}

}  // namespace opreduce
