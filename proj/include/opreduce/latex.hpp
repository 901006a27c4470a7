#pragma once

#include <string>

#include "opreduce/matrix.hpp"
#include "opreduce/polynomial.hpp"
#include "opreduce/rational.hpp"
#include "opreduce/reduction.hpp"

namespace opreduce {

std::string latex_scalar(const Rational& v);
std::string latex_polynomial(const Polynomial& p, const std::string& var = "\\lambda");
std::string latex_matrix(const Matrix& m);

/// Renders the partially reduced system as display math: one braced
/// block per subsystem holding the higher-order equation followed by its
/// first-order chain equations, with unknowns numbered globally.
std::string latex_reduced_system(const ReducedSystem& red);

}  // namespace opreduce
