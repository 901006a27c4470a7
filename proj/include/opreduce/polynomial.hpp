#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opreduce/rational.hpp"

namespace opreduce {

/// Dense univariate polynomial over Rational. Coefficients are stored
/// ascending by degree with no trailing zeros; the zero polynomial is the
/// empty coefficient list and its degree() is disengaged.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  static Polynomial constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  bool is_monic() const;
  const Rational& leading() const;  // requires nonzero

  /// Coefficient of x^k; zero beyond the stored range.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  /// Long division: p = q * quotient + remainder, deg(remainder) < deg(q).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);
  bool divides(const Polynomial& p) const;  // *this | p, exact

  /// Monic greatest common divisor; rejects gcd(0, 0).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial monic() const;  // requires nonzero
  Rational eval(const Rational& x) const;

  bool operator==(const Polynomial& o) const = default;

  /// Human-readable form, e.g. "x^2 - 3*x + 2".
  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace opreduce
