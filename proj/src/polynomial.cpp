#include "opreduce/polynomial.hpp"

#include <sstream>

#include "opreduce/errors.hpp"

namespace opreduce {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim(coeffs_);
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

std::optional<int> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

bool Polynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == Rational(1);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial{};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw InputError("polynomial division by zero");
  if (p.is_zero()) return {Polynomial{}, Polynomial{}};
  const int dq = *q.degree();
  const int dp = *p.degree();
  if (dp < dq) return {Polynomial{}, p};

  std::vector<Rational> rem = p.coeffs_;
  std::vector<Rational> quot(static_cast<std::size_t>(dp - dq) + 1, Rational(0));
  const Rational& lead = q.coeffs_.back();
  for (int k = dp; k >= dq; --k) {
    const Rational& head = rem[static_cast<std::size_t>(k)];
    if (head.is_zero()) continue;
    const Rational f = head / lead;
    quot[static_cast<std::size_t>(k - dq)] = f;
    for (int j = 0; j <= dq; ++j) {
      rem[static_cast<std::size_t>(k - dq + j)] -= f * q.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  trim(rem);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& p) const {
  return divmod(p, *this).second.is_zero();
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw InputError("cannot normalize the zero polynomial to monic");
  return scaled(Rational(1) / leading());
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = *degree(); k >= 0; --k) {
    const Rational c = coeff(k);
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace opreduce
