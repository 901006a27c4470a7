#include "opreduce/charpoly.hpp"

namespace opreduce {

std::vector<Rational> principal_minor_sums(const Matrix& b) {
  const int n = b.size();
  std::vector<Rational> delta;
  delta.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) delta.push_back(principal_minor_sum(b, k));
  return delta;
}

Polynomial charpoly_via_minors(const Matrix& b) {
  const int n = b.size();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(n)] = Rational(1);
  int sign = -1;
  for (int k = 1; k <= n; ++k) {
    const Rational dk = principal_minor_sum(b, k);
    coeffs[static_cast<std::size_t>(n - k)] = sign < 0 ? -dk : dk;
    sign = -sign;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial charpoly_faddeev(const Matrix& b) {
  const int n = b.size();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(n)] = Rational(1);
  Matrix work = b;
  Rational a(0);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix shifted = work;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += a;
      work = b * shifted;
    }
    a = -(work.trace() / Rational(k));
    coeffs[static_cast<std::size_t>(n - k)] = a;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace opreduce
