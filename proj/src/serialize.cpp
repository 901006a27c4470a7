#include "opreduce/serialize.hpp"

#include <fstream>
#include <sstream>

#include "opreduce/errors.hpp"

namespace opreduce {

namespace {

const Json& expect_field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(where + ": missing required field \"" + key + "\"");
  return *it;
}

void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
}

void expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a JSON array");
}

int expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw InputError(where + ": expected an integer");
  return j.get<int>();
}

Json vector_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json nested_to_json(const std::vector<std::vector<Rational>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(vector_to_json(r));
  return out;
}

std::vector<std::vector<Rational>> nested_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<std::vector<Rational>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Json to_json(const Rational& v) { return v.str(); }

Json to_json(const Polynomial& p) { return vector_to_json(p.coeffs()); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const OperatorElement& e) {
  Json out = Json::object();
  out["backend"] = backend_name(e.backend());
  out["values"] = vector_to_json(e.values());
  return out;
}

Json to_json(const RcfResult& rcf) {
  Json out = Json::object();
  out["n"] = rcf.n;
  Json blocks = Json::array();
  for (const auto& blk : rcf.blocks) {
    Json b = Json::object();
    b["size"] = blk.size;
    b["poly"] = to_json(blk.poly);
    blocks.push_back(std::move(b));
  }
  out["blocks"] = std::move(blocks);
  out["offsets"] = rcf.offsets;
  out["P"] = to_json(rcf.p);
  out["P_inv"] = to_json(rcf.p_inv);
  return out;
}

Json to_json(const ReducedSystem& red) {
  Json out = Json::object();
  out["n"] = red.n;
  out["P"] = to_json(red.p);
  out["P_inv"] = to_json(red.p_inv);
  Json subs = Json::array();
  for (const auto& ss : red.subsystems) {
    Json s = Json::object();
    s["offset"] = ss.offset;
    s["size"] = ss.size();
    s["poly"] = to_json(ss.poly);
    s["chain_equations"] = ss.chain_count();
    Json rhs = Json::object();
    rhs["block_size"] = ss.rhs.block_size;
    rhs["coeff"] = nested_to_json(ss.rhs.coeff);
    s["rhs"] = std::move(rhs);
    subs.push_back(std::move(s));
  }
  out["subsystems"] = std::move(subs);
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out = Json::object();
  out["backend"] = backend_name(report.backend);
  out["ok"] = report.ok();
  Json subs = Json::array();
  for (const auto& ss : report.subsystems) {
    Json s = Json::object();
    s["offset"] = ss.offset;
    s["size"] = ss.size;
    s["usable_length"] = ss.usable_length;
    s["higher_order"] = vector_to_json(ss.higher_order);
    s["chains"] = nested_to_json(ss.chains);
    subs.push_back(std::move(s));
  }
  out["subsystems"] = std::move(subs);
  if (!report.reconstruction.empty())
    out["reconstruction"] = nested_to_json(report.reconstruction);
  auto failure = report.first_failure();
  out["first_failure"] = failure ? Json(failure->describe()) : Json(nullptr);
  return out;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw InputError(where + ": expected a fraction string like \"2/3\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<Rational> vector_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<Rational> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j, const std::string& where) {
  return Polynomial(vector_from_json(j, where));
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  if (j.empty()) throw InputError(where + ": matrix must have at least one row");
  int n = static_cast<int>(j.size());
  Matrix m(n);
  for (size_t i = 0; i < j.size(); ++i) {
    auto row = vector_from_json(j[i], where + "[" + std::to_string(i) + "]");
    if (static_cast<int>(row.size()) != n)
      throw InputError(where + ": row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(n) +
                       " (matrix must be square)");
    for (int c = 0; c < n; ++c)
      m.at(static_cast<int>(i), c) = row[static_cast<size_t>(c)];
  }
  return m;
}

ReducedSystem reduced_system_from_json(const Json& j) {
  expect_object(j, "reduced system");
  ReducedSystem red;
  red.n = expect_int(expect_field(j, "n", "reduced system"), "reduced system.n");
  if (red.n < 1) throw InputError("reduced system.n must be positive");
  red.p = matrix_from_json(expect_field(j, "P", "reduced system"), "reduced system.P");
  red.p_inv =
      matrix_from_json(expect_field(j, "P_inv", "reduced system"), "reduced system.P_inv");
  const Json& subs = expect_field(j, "subsystems", "reduced system");
  expect_array(subs, "reduced system.subsystems");
  int covered = 0;
  for (size_t i = 0; i < subs.size(); ++i) {
    std::string where = "reduced system.subsystems[" + std::to_string(i) + "]";
    const Json& s = subs[i];
    expect_object(s, where);
    Subsystem ss;
    ss.offset = expect_int(expect_field(s, "offset", where), where + ".offset");
    ss.poly = polynomial_from_json(expect_field(s, "poly", where), where + ".poly");
    if (!ss.poly.is_monic() || *ss.poly.degree() < 1)
      throw InputError(where + ".poly must be monic of degree at least 1");
    const Json& rhs = expect_field(s, "rhs", where);
    expect_object(rhs, where + ".rhs");
    ss.rhs.block_size =
        expect_int(expect_field(rhs, "block_size", where), where + ".rhs.block_size");
    ss.rhs.coeff = nested_from_json(expect_field(rhs, "coeff", where), where + ".rhs.coeff");
    if (ss.rhs.block_size != *ss.poly.degree())
      throw InputError(where + ": rhs.block_size does not match the polynomial degree");
    if (static_cast<int>(ss.rhs.coeff.size()) != ss.rhs.block_size)
      throw InputError(where + ".rhs.coeff must have block_size rows");
    if (ss.offset != covered)
      throw InputError(where + ": offsets must tile the system contiguously");
    covered += ss.size();
    red.subsystems.push_back(std::move(ss));
  }
  if (covered != red.n)
    throw InputError("reduced system: subsystem sizes sum to " + std::to_string(covered) +
                     ", expected " + std::to_string(red.n));
  if (red.p.size() != red.n)
    throw InputError("reduced system.P must be " + std::to_string(red.n) + "x" +
                     std::to_string(red.n));
  if (red.p_inv.size() != red.n)
    throw InputError("reduced system.P_inv must be " + std::to_string(red.n) + "x" +
                     std::to_string(red.n));
  return red;
}

ProblemFile problem_from_json(const Json& j) {
  expect_object(j, "problem");
  static const char* known[] = {"matrix", "backend",  "free_column", "x0",
                                "window", "seed",     "initials",    "solution"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw InputError("problem: unknown field \"" + it.key() + "\"");
  }

  ProblemFile p;
  p.matrix = matrix_from_json(expect_field(j, "matrix", "problem"), "problem.matrix");
  int n = p.matrix.size();

  if (j.contains("backend")) {
    const Json& b = j["backend"];
    if (!b.is_string()) throw InputError("problem.backend: expected a string");
    p.backend = backend_from_name(b.get<std::string>());
  }
  if (j.contains("free_column")) {
    p.free_column = nested_from_json(j["free_column"], "problem.free_column");
    if (static_cast<int>(p.free_column.size()) != n)
      throw InputError("problem.free_column must have one window per component (" +
                       std::to_string(n) + ")");
  }
  if (j.contains("x0")) {
    p.x0 = vector_from_json(j["x0"], "problem.x0");
    if (static_cast<int>(p.x0->size()) != n)
      throw InputError("problem.x0 must have " + std::to_string(n) + " entries");
  }
  if (j.contains("window")) {
    int w = expect_int(j["window"], "problem.window");
    if (w < 1) throw InputError("problem.window must be positive");
    p.window = w;
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) throw InputError("problem.seed: expected an integer");
    p.seed = j["seed"].get<long>();
  }
  if (j.contains("initials")) {
    p.initials = nested_from_json(j["initials"], "problem.initials");
  }
  if (j.contains("solution")) {
    p.solution = nested_from_json(j["solution"], "problem.solution");
    if (static_cast<int>(p.solution.size()) != n)
      throw InputError("problem.solution must have one window per component (" +
                       std::to_string(n) + ")");
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return problem_from_json(parse_json_text(buf.str(), "input file \"" + path + "\""));
}

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError(what + ": not valid JSON");
  return j;
}

}  // namespace opreduce
