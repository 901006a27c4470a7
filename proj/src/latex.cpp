#include "opreduce/latex.hpp"

#include <sstream>

namespace opreduce {

namespace {

std::string latex_magnitude(const Rational& v) {
  Rational a = v.abs();
  if (a.is_integer()) return a.str();
  return "\\frac{" + a.numerator_str() + "}{" + a.denominator_str() + "}";
}

// Appends "+/- coeff * body" with the usual elisions: unit coefficients
// drop the number, a leading positive term drops the plus sign.
void append_term(std::ostringstream& os, bool& first, const Rational& coeff,
                 const std::string& body) {
  if (coeff.is_zero()) return;
  bool negative = coeff.sign() < 0;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  Rational a = coeff.abs();
  bool unit = (a == Rational(1));
  if (!unit || body.empty()) os << latex_magnitude(coeff);
  if (!body.empty()) {
    if (!unit) os << " ";
    os << body;
  }
  first = false;
}

std::string power_body(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^{" + std::to_string(k) + "}";
}

std::string applied_psi(int power, int index) {
  std::string psi = "\\psi_{" + std::to_string(index) + "}";
  if (power == 0) return psi;
  if (power == 1) return "A(" + psi + ")";
  return "A^{" + std::to_string(power) + "}(" + psi + ")";
}

}  // namespace

std::string latex_scalar(const Rational& v) {
  if (v.sign() < 0) return "-" + latex_magnitude(v);
  return latex_magnitude(v);
}

std::string latex_polynomial(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = *p.degree(); k >= 0; --k) {
    append_term(os, first, p.coeff(k), power_body(var, k));
  }
  return os.str();
}

std::string latex_matrix(const Matrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) os << " & ";
      os << latex_scalar(m.at(i, j));
    }
    os << (i + 1 < m.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string latex_reduced_system(const ReducedSystem& red) {
  std::ostringstream os;
  for (size_t bi = 0; bi < red.subsystems.size(); ++bi) {
    const Subsystem& ss = red.subsystems[bi];
    int s = ss.size();
    int off = ss.offset;
    if (bi) os << "\n";
    os << "% block " << (bi + 1) << ": \\Delta_{C_" << (bi + 1)
       << "}(\\lambda) = " << latex_polynomial(ss.poly) << "\n";
    os << "\\left\\{\\begin{array}{l}\n";

    os << "\\Delta_{C_" << (bi + 1) << "}(A)(y_{" << (off + 1) << "}) = ";
    std::ostringstream rhs;
    bool first = true;
    for (int m = s - 1; m >= 0; --m) {
      for (int j = 1; j <= s - m; ++j) {
        append_term(rhs, first, ss.rhs.at(m, j), applied_psi(m, off + j));
      }
    }
    os << (first ? "0" : rhs.str());

    for (int m = 1; m < s; ++m) {
      os << " \\\\\n";
      os << "y_{" << (off + m + 1) << "} = A(y_{" << (off + m) << "}) - \\psi_{" << (off + m)
         << "}";
    }
    os << "\n\\end{array}\\right\\}\n";
  }
  return os.str();
}

}  // namespace opreduce
