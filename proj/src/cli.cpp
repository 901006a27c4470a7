#include "opreduce/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "opreduce/canonical.hpp"
#include "opreduce/charpoly.hpp"
#include "opreduce/errors.hpp"
#include "opreduce/latex.hpp"
#include "opreduce/operators.hpp"
#include "opreduce/serialize.hpp"

namespace opreduce {

namespace {

struct Options {
  std::string file;
  std::string emit = "json";
  std::string backend_flag;
  int steps = 0;  // 0 = take the window from the file
  std::optional<long> seed_flag;
  std::string output;
};

void write_output(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw InputError("cannot open output file \"" + opt.output + "\"");
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

std::vector<Rational> random_values(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(Rational(dist(rng)));
  return out;
}

Backend resolve_backend(const ProblemFile& p, const Options& opt) {
  std::optional<Backend> flag;
  if (!opt.backend_flag.empty()) flag = backend_from_name(opt.backend_flag);
  if (p.backend && flag && *p.backend != *flag)
    throw InputError("--backend " + opt.backend_flag + " conflicts with the input file's \"" +
                     backend_name(*p.backend) + "\"");
  if (p.backend) return *p.backend;
  if (flag) return *flag;
  throw InputError("no backend given: set \"backend\" in the input file or pass --backend");
}

std::vector<OperatorElement> file_elements(const std::vector<std::vector<Rational>>& windows,
                                           Backend backend) {
  std::vector<OperatorElement> out;
  out.reserve(windows.size());
  for (const auto& w : windows) out.emplace_back(backend, w);
  return out;
}

int max_block_size(const ReducedSystem& red) {
  int m = 0;
  for (const auto& ss : red.subsystems) m = std::max(m, ss.size());
  return m;
}

std::vector<Rational> resolve_x0(const ProblemFile& p, const Options& opt, int n) {
  if (p.x0) return *p.x0;
  std::optional<long> seed = opt.seed_flag ? opt.seed_flag : p.seed;
  if (!seed)
    throw InputError("no initial vector: set \"x0\" in the input file or pass --seed");
  std::mt19937_64 rng(static_cast<unsigned long long>(*seed));
  return random_values(rng, n);
}

std::vector<std::vector<Rational>> resolve_initials(const ProblemFile& p, const Options& opt,
                                                    const ReducedSystem& red) {
  if (p.initials) {
    if (p.initials->size() != red.subsystems.size())
      throw InputError("problem.initials must have one list per subsystem (" +
                       std::to_string(red.subsystems.size()) + ")");
    for (size_t i = 0; i < p.initials->size(); ++i) {
      if (static_cast<int>((*p.initials)[i].size()) != red.subsystems[i].size())
        throw InputError("problem.initials[" + std::to_string(i) + "] needs " +
                         std::to_string(red.subsystems[i].size()) + " values");
    }
    return *p.initials;
  }
  std::optional<long> seed = opt.seed_flag ? opt.seed_flag : p.seed;
  if (!seed)
    throw InputError("no initial values: set \"initials\" in the input file or pass --seed");
  std::mt19937_64 rng(static_cast<unsigned long long>(*seed));
  std::vector<std::vector<Rational>> out;
  for (const auto& ss : red.subsystems) out.push_back(random_values(rng, ss.size()));
  return out;
}

int cmd_charpoly(const Options& opt, std::ostream& out) {
  ProblemFile p = load_problem(opt.file);
  std::vector<Rational> delta = principal_minor_sums(p.matrix);
  Polynomial chi = charpoly_faddeev(p.matrix);
  Json j = Json::object();
  j["n"] = p.matrix.size();
  Json d = Json::array();
  for (const auto& v : delta) d.push_back(v.str());
  j["delta"] = std::move(d);
  j["coefficients"] = to_json(chi);
  write_output(opt, out, j.dump(2));
  return 0;
}

int cmd_rcf(const Options& opt, std::ostream& out) {
  ProblemFile p = load_problem(opt.file);
  RcfResult rcf = rational_canonical_form(p.matrix);
  if (opt.emit == "latex") {
    std::string text;
    for (size_t i = 0; i < rcf.blocks.size(); ++i) {
      text += "% block " + std::to_string(i + 1) + "\n";
      text += latex_polynomial(rcf.blocks[i].poly) + "\n";
    }
    text += "% canonical matrix\n" + latex_matrix(rcf.canonical_matrix()) + "\n";
    text += "% transform P\n" + latex_matrix(rcf.p) + "\n";
    write_output(opt, out, text);
  } else {
    write_output(opt, out, to_json(rcf).dump(2));
  }
  return 0;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  ProblemFile p = load_problem(opt.file);
  ReducedSystem red = partially_reduce(p.matrix);
  if (opt.emit == "latex") {
    write_output(opt, out, latex_reduced_system(red));
  } else {
    write_output(opt, out, to_json(red).dump(2));
  }
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  ProblemFile p = load_problem(opt.file);
  Backend backend = resolve_backend(p, opt);
  if (!p.has_free_column())
    throw InputError("verify needs \"free_column\" in the input file");
  ReducedSystem red = partially_reduce(p.matrix);
  int smax = max_block_size(red);
  std::vector<OperatorElement> phi = file_elements(p.free_column, backend);

  std::vector<OperatorElement> x;
  if (p.has_solution()) {
    x = file_elements(p.solution, backend);
  } else if (backend == Backend::shift) {
    int steps = opt.steps > 0 ? opt.steps : p.window.value_or(0);
    if (steps < 1)
      throw InputError("no window: set \"window\" in the input file or pass --steps");
    if (steps < smax)
      throw InputError("window too small: the largest block has size " +
                       std::to_string(smax) + ", need at least " + std::to_string(smax) +
                       " steps, have " + std::to_string(steps));
    x = iterate_system(p.matrix, phi, resolve_x0(p, opt, red.n), steps);
  } else {
    throw InputError("verify on the dseries backend needs an explicit \"solution\"");
  }

  for (const auto& e : x) {
    if (e.length() < smax + 1)
      throw InputError("solution window too small: the largest block has size " +
                       std::to_string(smax) + ", need at least " + std::to_string(smax + 1) +
                       " values, have " + std::to_string(e.length()));
  }

  VerificationReport forward = verify_forward(red, phi, x);
  std::vector<OperatorElement> y = apply_matrix(red.p_inv, x);
  VerificationReport reverse = reconstruct_and_verify(red, y, phi, p.matrix);

  VerificationReport combined = forward;
  combined.reconstruction = reverse.reconstruction;
  write_output(opt, out, to_json(combined).dump(2));
  return combined.ok() ? 0 : 1;
}

int cmd_solve(const Options& opt, std::ostream& out) {
  ProblemFile p = load_problem(opt.file);
  Backend backend = resolve_backend(p, opt);
  if (backend != Backend::shift)
    throw InputError("solve supports only the shift backend");
  if (!p.has_free_column())
    throw InputError("solve needs \"free_column\" in the input file");
  ReducedSystem red = partially_reduce(p.matrix);
  std::vector<OperatorElement> phi = file_elements(p.free_column, backend);
  std::vector<std::vector<Rational>> initials = resolve_initials(p, opt, red);

  std::vector<OperatorElement> psi = apply_matrix(red.p_inv, phi);
  std::vector<OperatorElement> y = solve_reduced_shift(red, psi, initials);
  std::vector<OperatorElement> x = apply_matrix(red.p, y);

  VerificationReport check = reconstruct_and_verify(red, y, phi, p.matrix);
  if (!check.ok())
    throw InternalError("solver output failed verification at " +
                        check.first_failure()->describe());

  Json j = Json::object();
  j["backend"] = backend_name(backend);
  Json ys = Json::array();
  for (const auto& e : y) ys.push_back(to_json(e)["values"]);
  Json xs = Json::array();
  for (const auto& e : x) xs.push_back(to_json(e)["values"]);
  j["y"] = std::move(ys);
  j["x"] = std::move(xs);
  write_output(opt, out, j.dump(2));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduction of first-order operator systems to canonical "
               "higher-order form"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_emit) {
    sub->add_option("file", opt.file, "problem description (JSON)")->required();
    sub->add_option("--output", opt.output, "write the result to a file instead of stdout");
    if (with_emit)
      sub->add_option("--emit", opt.emit, "output format")
          ->check(CLI::IsMember({"json", "latex"}));
  };

  CLI::App* charpoly = app.add_subcommand(
      "charpoly", "characteristic polynomial and principal minor sums");
  add_common(charpoly, false);

  CLI::App* rcf = app.add_subcommand("rcf", "rational canonical form with transform");
  add_common(rcf, true);

  CLI::App* reduce = app.add_subcommand("reduce", "partially reduced system");
  add_common(reduce, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "check a solution against the reduced and the original system");
  add_common(verify, false);
  verify->add_option("--backend", opt.backend_flag, "operator backend")
      ->check(CLI::IsMember({"shift", "dseries"}));
  verify->add_option("--steps", opt.steps, "forward steps for the shift backend");
  long seed_value = 0;
  CLI::Option* seed_opt =
      verify->add_option("--seed", seed_value, "seed for missing random data");

  CLI::App* solve = app.add_subcommand(
      "solve", "solve the reduced system forward on the shift backend");
  add_common(solve, false);
  solve->add_option("--backend", opt.backend_flag, "operator backend")
      ->check(CLI::IsMember({"shift", "dseries"}));
  CLI::Option* seed_opt2 =
      solve->add_option("--seed", seed_value, "seed for missing initial values");

  std::vector<const char*> argv;
  argv.push_back("opreduce");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (seed_opt->count() > 0 || seed_opt2->count() > 0) opt.seed_flag = seed_value;

  try {
    if (charpoly->parsed()) return cmd_charpoly(opt, out);
    if (rcf->parsed()) return cmd_rcf(opt, out);
    if (reduce->parsed()) return cmd_reduce(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (solve->parsed()) return cmd_solve(opt, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace opreduce
