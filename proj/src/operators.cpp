#include "opreduce/operators.hpp"

#include <algorithm>
#include <sstream>

#include "opreduce/canonical.hpp"
#include "opreduce/errors.hpp"

namespace opreduce {

namespace {

int min_length(const std::vector<OperatorElement>& v) {
  int m = v.empty() ? 0 : v.front().length();
  for (const auto& e : v) m = std::min(m, e.length());
  return m;
}

Backend common_backend(const std::vector<OperatorElement>& v, const char* what) {
  if (v.empty()) throw InputError(std::string(what) + " must not be empty");
  Backend b = v.front().backend();
  for (const auto& e : v) {
    if (e.backend() != b)
      throw InputError(std::string(what) + " mixes shift and dseries elements");
  }
  return b;
}

void require_backend(const std::vector<OperatorElement>& v, Backend b, const char* what) {
  for (const auto& e : v) {
    if (e.backend() != b)
      throw InputError(std::string(what) + " must use the " + backend_name(b) + " backend");
  }
}

}  // namespace

std::string backend_name(Backend b) {
  return b == Backend::shift ? "shift" : "dseries";
}

Backend backend_from_name(const std::string& name) {
  if (name == "shift") return Backend::shift;
  if (name == "dseries") return Backend::dseries;
  throw InputError("unknown backend \"" + name + "\" (expected \"shift\" or \"dseries\")");
}

OperatorElement::OperatorElement(Backend backend, std::vector<Rational> values)
    : backend_(backend), values_(std::move(values)) {}

const Rational& OperatorElement::at(int i) const {
  if (i < 0 || i >= length())
    throw InputError("element index " + std::to_string(i) + " outside window of length " +
                     std::to_string(length()));
  return values_[static_cast<size_t>(i)];
}

OperatorElement OperatorElement::apply() const {
  if (values_.empty())
    throw InputError("operator applied to an exhausted element (window length 0)");
  std::vector<Rational> out;
  out.reserve(values_.size() - 1);
  for (size_t j = 1; j < values_.size(); ++j) {
    if (backend_ == Backend::shift) {
      out.push_back(values_[j]);
    } else {
      out.push_back(values_[j] * Rational(static_cast<long>(j)));
    }
  }
  return OperatorElement(backend_, std::move(out));
}

OperatorElement OperatorElement::truncated(int len) const {
  if (len < 0 || len > length())
    throw InputError("cannot truncate window of length " + std::to_string(length()) +
                     " to length " + std::to_string(len));
  return OperatorElement(backend_,
                         std::vector<Rational>(values_.begin(), values_.begin() + len));
}

bool OperatorElement::all_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v.is_zero(); });
}

OperatorElement OperatorElement::operator+(const OperatorElement& o) const {
  if (backend_ != o.backend_)
    throw InputError("cannot add elements from different backends");
  size_t len = std::min(values_.size(), o.values_.size());
  std::vector<Rational> out(len);
  for (size_t i = 0; i < len; ++i) out[i] = values_[i] + o.values_[i];
  return OperatorElement(backend_, std::move(out));
}

OperatorElement OperatorElement::operator-(const OperatorElement& o) const {
  if (backend_ != o.backend_)
    throw InputError("cannot subtract elements from different backends");
  size_t len = std::min(values_.size(), o.values_.size());
  std::vector<Rational> out(len);
  for (size_t i = 0; i < len; ++i) out[i] = values_[i] - o.values_[i];
  return OperatorElement(backend_, std::move(out));
}

OperatorElement OperatorElement::scaled(const Rational& c) const {
  std::vector<Rational> out(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * c;
  return OperatorElement(backend_, std::move(out));
}

OperatorElement zero_element(Backend backend, int length) {
  if (length < 0) throw InputError("zero element length must be nonnegative");
  return OperatorElement(backend, std::vector<Rational>(static_cast<size_t>(length)));
}

std::vector<OperatorElement> apply_matrix(const Matrix& m,
                                          const std::vector<OperatorElement>& v) {
  if (m.size() != static_cast<int>(v.size()))
    throw InputError("matrix has " + std::to_string(m.size()) + " columns but got " +
                     std::to_string(v.size()) + " elements");
  Backend backend = common_backend(v, "matrix action input");
  int len = min_length(v);
  std::vector<OperatorElement> out;
  out.reserve(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    OperatorElement acc = zero_element(backend, len);
    for (int j = 0; j < m.size(); ++j) {
      acc = acc + v[static_cast<size_t>(j)].scaled(m.at(i, j));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

OperatorElement apply_operator_poly(const Polynomial& p, const OperatorElement& x) {
  if (p.is_zero()) return zero_element(x.backend(), x.length());
  int deg = *p.degree();
  if (x.length() < deg + 1)
    throw InputError("window too short to apply a degree-" + std::to_string(deg) +
                     " operator polynomial: need at least " + std::to_string(deg + 1) +
                     " values, have " + std::to_string(x.length()));
  OperatorElement power = x;
  OperatorElement acc = x.truncated(x.length() - deg).scaled(p.coeff(0));
  for (int j = 1; j <= deg; ++j) {
    power = power.apply();
    acc = acc + power.truncated(x.length() - deg).scaled(p.coeff(j));
  }
  return acc;
}

OperatorElement evaluate_rhs(const RhsTable& rhs, const std::vector<OperatorElement>& psi) {
  int s = rhs.block_size;
  if (static_cast<int>(psi.size()) != s)
    throw InputError("RHS table for block size " + std::to_string(s) + " got " +
                     std::to_string(psi.size()) + " elements");
  Backend backend = common_backend(psi, "RHS input");
  int len = min_length(psi);
  if (len < s)
    throw InputError("window too short to evaluate the block RHS: need at least " +
                     std::to_string(s) + " values, have " + std::to_string(len));
  int out_len = len - (s - 1);
  OperatorElement acc = zero_element(backend, out_len);
  for (int m = 0; m < s; ++m) {
    for (int j = 1; j <= s - m; ++j) {
      const Rational& c = rhs.at(m, j);
      if (c.is_zero()) continue;
      OperatorElement term = psi[static_cast<size_t>(j - 1)];
      for (int a = 0; a < m; ++a) term = term.apply();
      acc = acc + term.truncated(out_len).scaled(c);
    }
  }
  return acc;
}

std::vector<OperatorElement> iterate_system(const Matrix& b,
                                            const std::vector<OperatorElement>& phi,
                                            const std::vector<Rational>& x0, int steps) {
  int n = b.size();
  if (static_cast<int>(phi.size()) != n)
    throw InputError("free column has " + std::to_string(phi.size()) +
                     " components, matrix order is " + std::to_string(n));
  if (static_cast<int>(x0.size()) != n)
    throw InputError("initial vector has " + std::to_string(x0.size()) +
                     " components, matrix order is " + std::to_string(n));
  if (steps < 1) throw InputError("step count must be at least 1");
  require_backend(phi, Backend::shift, "free column");
  if (min_length(phi) < steps)
    throw InputError("free column window too short: need at least " + std::to_string(steps) +
                     " values, have " + std::to_string(min_length(phi)));

  std::vector<std::vector<Rational>> cols(static_cast<size_t>(n));
  std::vector<Rational> cur = x0;
  for (int i = 0; i < n; ++i) cols[static_cast<size_t>(i)].push_back(cur[static_cast<size_t>(i)]);
  for (int t = 0; t < steps; ++t) {
    std::vector<Rational> next = b.apply(cur);
    for (int i = 0; i < n; ++i) {
      next[static_cast<size_t>(i)] += phi[static_cast<size_t>(i)].at(t);
      cols[static_cast<size_t>(i)].push_back(next[static_cast<size_t>(i)]);
    }
    cur = std::move(next);
  }
  std::vector<OperatorElement> out;
  out.reserve(static_cast<size_t>(n));
  for (auto& c : cols) out.emplace_back(Backend::shift, std::move(c));
  return out;
}

std::vector<OperatorElement> integrate_system(const Matrix& b,
                                              const std::vector<OperatorElement>& phi,
                                              const std::vector<Rational>& x0, int degree) {
  int n = b.size();
  if (static_cast<int>(phi.size()) != n)
    throw InputError("free column has " + std::to_string(phi.size()) +
                     " components, matrix order is " + std::to_string(n));
  if (static_cast<int>(x0.size()) != n)
    throw InputError("initial vector has " + std::to_string(x0.size()) +
                     " components, matrix order is " + std::to_string(n));
  if (degree < 1) throw InputError("target degree must be at least 1");
  require_backend(phi, Backend::dseries, "free column");
  if (min_length(phi) < degree)
    throw InputError("free column window too short: need at least " + std::to_string(degree) +
                     " coefficients, have " + std::to_string(min_length(phi)));

  std::vector<std::vector<Rational>> cols(static_cast<size_t>(n));
  std::vector<Rational> cur = x0;
  for (int i = 0; i < n; ++i) cols[static_cast<size_t>(i)].push_back(cur[static_cast<size_t>(i)]);
  for (int t = 0; t < degree; ++t) {
    std::vector<Rational> next = b.apply(cur);
    Rational divisor(static_cast<long>(t) + 1);
    for (int i = 0; i < n; ++i) {
      next[static_cast<size_t>(i)] += phi[static_cast<size_t>(i)].at(t);
      next[static_cast<size_t>(i)] /= divisor;
      cols[static_cast<size_t>(i)].push_back(next[static_cast<size_t>(i)]);
    }
    cur = std::move(next);
  }
  std::vector<OperatorElement> out;
  out.reserve(static_cast<size_t>(n));
  for (auto& c : cols) out.emplace_back(Backend::dseries, std::move(c));
  return out;
}

std::string ResidualLocation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::higher_order:
      os << "higher-order equation of subsystem " << group << ", window index " << position;
      break;
    case Kind::chain:
      os << "chain equation " << equation << " of subsystem " << group << ", window index "
         << position;
      break;
    case Kind::reconstruction:
      os << "reconstructed component " << group << ", window index " << position;
      break;
  }
  return os.str();
}

bool SubsystemResiduals::clean() const {
  auto zero = [](const Rational& v) { return v.is_zero(); };
  if (!std::all_of(higher_order.begin(), higher_order.end(), zero)) return false;
  for (const auto& c : chains) {
    if (!std::all_of(c.begin(), c.end(), zero)) return false;
  }
  return true;
}

bool VerificationReport::ok() const { return !first_failure().has_value(); }

std::optional<ResidualLocation> VerificationReport::first_failure() const {
  for (size_t i = 0; i < subsystems.size(); ++i) {
    const auto& ss = subsystems[i];
    for (size_t t = 0; t < ss.higher_order.size(); ++t) {
      if (!ss.higher_order[t].is_zero())
        return ResidualLocation{ResidualLocation::Kind::higher_order, static_cast<int>(i), 0,
                                static_cast<int>(t)};
    }
    for (size_t m = 0; m < ss.chains.size(); ++m) {
      for (size_t t = 0; t < ss.chains[m].size(); ++t) {
        if (!ss.chains[m][t].is_zero())
          return ResidualLocation{ResidualLocation::Kind::chain, static_cast<int>(i),
                                  static_cast<int>(m) + 1, static_cast<int>(t)};
      }
    }
  }
  for (size_t i = 0; i < reconstruction.size(); ++i) {
    for (size_t t = 0; t < reconstruction[i].size(); ++t) {
      if (!reconstruction[i][t].is_zero())
        return ResidualLocation{ResidualLocation::Kind::reconstruction, static_cast<int>(i), 0,
                                static_cast<int>(t)};
    }
  }
  return std::nullopt;
}

VerificationReport verify_forward(const Matrix& b, const std::vector<OperatorElement>& phi,
                                  const std::vector<OperatorElement>& x) {
  return verify_forward(partially_reduce(b), phi, x);
}

VerificationReport verify_forward(const ReducedSystem& reduced,
                                  const std::vector<OperatorElement>& phi,
                                  const std::vector<OperatorElement>& x) {
  int n = reduced.n;
  if (static_cast<int>(phi.size()) != n)
    throw InputError("free column has " + std::to_string(phi.size()) +
                     " components, system order is " + std::to_string(n));
  if (static_cast<int>(x.size()) != n)
    throw InputError("solution has " + std::to_string(x.size()) +
                     " components, system order is " + std::to_string(n));
  Backend backend = common_backend(phi, "free column");
  require_backend(x, backend, "solution");

  std::vector<OperatorElement> psi = apply_matrix(reduced.p_inv, phi);
  std::vector<OperatorElement> y = apply_matrix(reduced.p_inv, x);

  VerificationReport report;
  report.backend = backend;
  for (const auto& ss : reduced.subsystems) {
    int s = ss.size();
    int off = ss.offset;
    SubsystemResiduals res;
    res.offset = off;
    res.size = s;

    const OperatorElement& lead = y[static_cast<size_t>(off)];
    if (lead.length() < s + 1)
      throw InputError("window too short for a block of size " + std::to_string(s) +
                       ": need at least " + std::to_string(s + 1) + " values, have " +
                       std::to_string(lead.length()));
    OperatorElement lhs = apply_operator_poly(ss.poly, lead);
    std::vector<OperatorElement> block(psi.begin() + off, psi.begin() + off + s);
    OperatorElement rhs = evaluate_rhs(ss.rhs, block);
    int usable = std::min(lhs.length(), rhs.length());
    res.usable_length = usable;
    res.higher_order = (lhs.truncated(usable) - rhs.truncated(usable)).values();

    for (int m = 1; m < s; ++m) {
      const OperatorElement& prev = y[static_cast<size_t>(off + m - 1)];
      if (prev.length() < 1)
        throw InputError("window exhausted in chain equation " + std::to_string(m));
      OperatorElement expected = prev.apply() - psi[static_cast<size_t>(off + m - 1)];
      OperatorElement diff = y[static_cast<size_t>(off + m)] - expected;
      if (diff.length() < 1)
        throw InputError("window too short to check chain equation " + std::to_string(m));
      res.chains.push_back(diff.values());
    }
    report.subsystems.push_back(std::move(res));
  }
  return report;
}

VerificationReport reconstruct_and_verify(const ReducedSystem& reduced,
                                          const std::vector<OperatorElement>& y,
                                          const std::vector<OperatorElement>& phi,
                                          const Matrix& b) {
  int n = reduced.n;
  if (b.size() != n)
    throw InputError("system matrix order does not match the reduced system");
  if (static_cast<int>(y.size()) != n)
    throw InputError("reduced solution has " + std::to_string(y.size()) +
                     " components, system order is " + std::to_string(n));
  if (static_cast<int>(phi.size()) != n)
    throw InputError("free column has " + std::to_string(phi.size()) +
                     " components, system order is " + std::to_string(n));
  Backend backend = common_backend(y, "reduced solution");
  require_backend(phi, backend, "free column");

  std::vector<OperatorElement> x = apply_matrix(reduced.p, y);
  int xlen = min_length(x);
  if (xlen < 2)
    throw InputError("window too short to check the first-order system: need at least 2 "
                     "values, have " + std::to_string(xlen));

  VerificationReport report;
  report.backend = backend;
  for (int i = 0; i < n; ++i) {
    OperatorElement lhs = x[static_cast<size_t>(i)].apply();
    OperatorElement rhs = zero_element(backend, xlen);
    for (int j = 0; j < n; ++j) {
      rhs = rhs + x[static_cast<size_t>(j)].scaled(b.at(i, j));
    }
    rhs = rhs + phi[static_cast<size_t>(i)];
    OperatorElement diff = lhs - rhs;
    if (diff.length() < 1)
      throw InputError("free column window too short to check component " + std::to_string(i));
    report.reconstruction.push_back(diff.values());
  }
  return report;
}

std::vector<OperatorElement> solve_reduced_shift(
    const ReducedSystem& reduced, const std::vector<OperatorElement>& psi,
    const std::vector<std::vector<Rational>>& initials) {
  int n = reduced.n;
  if (static_cast<int>(psi.size()) != n)
    throw InputError("transformed free column has " + std::to_string(psi.size()) +
                     " components, system order is " + std::to_string(n));
  require_backend(psi, Backend::shift, "transformed free column");
  if (initials.size() != reduced.subsystems.size())
    throw InputError("expected " + std::to_string(reduced.subsystems.size()) +
                     " initial value lists, got " + std::to_string(initials.size()));

  std::vector<OperatorElement> y(static_cast<size_t>(n), zero_element(Backend::shift, 0));
  for (size_t bi = 0; bi < reduced.subsystems.size(); ++bi) {
    const Subsystem& ss = reduced.subsystems[bi];
    int s = ss.size();
    int off = ss.offset;
    if (static_cast<int>(initials[bi].size()) != s)
      throw InputError("subsystem " + std::to_string(bi) + " needs " + std::to_string(s) +
                       " initial values, got " + std::to_string(initials[bi].size()));

    std::vector<OperatorElement> block(psi.begin() + off, psi.begin() + off + s);
    OperatorElement rhs = evaluate_rhs(ss.rhs, block);
    int r = rhs.length();

    std::vector<Rational> u = initials[bi];
    u.resize(static_cast<size_t>(s + r));
    for (int t = 0; t < r; ++t) {
      Rational acc = rhs.at(t);
      for (int j = 0; j < s; ++j) {
        acc -= ss.poly.coeff(j) * u[static_cast<size_t>(t + j)];
      }
      u[static_cast<size_t>(t + s)] = acc;
    }
    y[static_cast<size_t>(off)] = OperatorElement(Backend::shift, std::move(u));
    for (int m = 1; m < s; ++m) {
      y[static_cast<size_t>(off + m)] =
          y[static_cast<size_t>(off + m - 1)].apply() - psi[static_cast<size_t>(off + m - 1)];
    }
  }
  return y;
}

}  // namespace opreduce
