#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opreduce/canonical.hpp"
#include "opreduce/matrix.hpp"
#include "opreduce/operators.hpp"
#include "opreduce/polynomial.hpp"
#include "opreduce/reduction.hpp"

namespace opreduce {

using Json = nlohmann::ordered_json;

// Scalars serialize as canonical fraction strings ("2/3", "-1", "0"),
// polynomials as ascending coefficient arrays, matrices as row arrays.

Json to_json(const Rational& v);
Json to_json(const Polynomial& p);
Json to_json(const Matrix& m);
Json to_json(const OperatorElement& e);
Json to_json(const RcfResult& rcf);
Json to_json(const ReducedSystem& red);
Json to_json(const VerificationReport& report);

Rational rational_from_json(const Json& j, const std::string& where);
Polynomial polynomial_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);
std::vector<Rational> vector_from_json(const Json& j, const std::string& where);
ReducedSystem reduced_system_from_json(const Json& j);

/// Problem description consumed by the command line tool. Only the matrix
/// is mandatory; the rest depends on the subcommand.
struct ProblemFile {
  Matrix matrix;
  std::optional<Backend> backend;
  std::vector<std::vector<Rational>> free_column;  // one window per component
  std::optional<std::vector<Rational>> x0;
  std::optional<int> window;
  std::optional<long> seed;
  std::optional<std::vector<std::vector<Rational>>> initials;
  std::vector<std::vector<Rational>> solution;  // optional explicit solution windows

  bool has_free_column() const { return !free_column.empty(); }
  bool has_solution() const { return !solution.empty(); }
};

ProblemFile problem_from_json(const Json& j);
ProblemFile load_problem(const std::string& path);

Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace opreduce
