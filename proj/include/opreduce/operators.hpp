#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opreduce/matrix.hpp"
#include "opreduce/polynomial.hpp"
#include "opreduce/reduction.hpp"

namespace opreduce {

/// The two concrete operator backends: "shift" acts on finite sequence
/// windows as A(x)_t = x_{t+1}; "dseries" acts on truncated Maclaurin
/// series as the formal derivative.
enum class Backend { shift, dseries };

std::string backend_name(Backend b);
Backend backend_from_name(const std::string& name);

/// A finite-window element of the backend vector space. Every application
/// of the operator consumes one index (shift) or one degree (dseries);
/// operations on the exhausted empty window fail loudly instead of
/// fabricating truncated data.
class OperatorElement {
 public:
  OperatorElement(Backend backend, std::vector<Rational> values);

  Backend backend() const { return backend_; }
  int length() const { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(int i) const;

  /// One application of the operator; the window shrinks by one.
  OperatorElement apply() const;
  OperatorElement truncated(int len) const;
  bool all_zero() const;

  /// Sum / difference on the common window prefix; backends must match.
  OperatorElement operator+(const OperatorElement& o) const;
  OperatorElement operator-(const OperatorElement& o) const;
  OperatorElement scaled(const Rational& c) const;

  bool operator==(const OperatorElement& o) const = default;

 private:
  Backend backend_;
  std::vector<Rational> values_;
};

OperatorElement zero_element(Backend backend, int length);

/// Componentwise matrix action: out_i = sum_j m[i][j] * v_j, truncated to
/// the shortest input window.
std::vector<OperatorElement> apply_matrix(const Matrix& m,
                                          const std::vector<OperatorElement>& v);

/// p(A) applied to x: sum of p_j * A^j(x). Requires window >= deg(p) + 1;
/// the result window is shorter by deg(p).
OperatorElement apply_operator_poly(const Polynomial& p, const OperatorElement& x);

/// Evaluates an RHS table on a block of psi elements: sum over (m, j) of
/// coeff[m][j] * A^m(psi_j). Each psi needs window >= block size.
OperatorElement evaluate_rhs(const RhsTable& rhs, const std::vector<OperatorElement>& psi);

/// Exact forward solution of the first-order system on the shift backend:
/// x_0 = x0 and x_{t+1} = B x_t + phi_t for 0 <= t < steps. Each phi
/// component needs window >= steps; outputs have window steps + 1.
std::vector<OperatorElement> iterate_system(const Matrix& b,
                                            const std::vector<OperatorElement>& phi,
                                            const std::vector<Rational>& x0, int steps);

/// Series counterpart on the dseries backend: coefficient recurrence
/// c_{t+1} = (B c_t + phi_t) / (t + 1) starting from c_0 = x0, producing
/// exact truncated-series solutions up to the given degree.
std::vector<OperatorElement> integrate_system(const Matrix& b,
                                              const std::vector<OperatorElement>& phi,
                                              const std::vector<Rational>& x0, int degree);

struct ResidualLocation {
  enum class Kind { higher_order, chain, reconstruction };
  Kind kind = Kind::higher_order;
  int group = 0;     // subsystem index, or component index for reconstruction
  int equation = 0;  // chain number within the subsystem (1-based), 0 otherwise
  int position = 0;  // window index of the offending value

  std::string describe() const;
};

struct SubsystemResiduals {
  int offset = 0;
  int size = 0;
  int usable_length = 0;  // window of the higher-order residual
  std::vector<Rational> higher_order;
  std::vector<std::vector<Rational>> chains;

  bool clean() const;
};

/// Residual evidence from a verification run. Success means every stored
/// residual is exactly zero.
struct VerificationReport {
  Backend backend = Backend::shift;
  std::vector<SubsystemResiduals> subsystems;
  std::vector<std::vector<Rational>> reconstruction;  // per component, may be empty

  bool ok() const;
  std::optional<ResidualLocation> first_failure() const;
};

/// Checks that a solution x of the first-order system satisfies the whole
/// partially reduced system: transforms psi = P^-1 phi and y = P^-1 x,
/// then evaluates every block's higher-order equation and every chain
/// equation on the usable window. Residuals are reported, not thrown;
/// windows too short for the required operator powers are input errors.
VerificationReport verify_forward(const Matrix& b, const std::vector<OperatorElement>& phi,
                                  const std::vector<OperatorElement>& x);
VerificationReport verify_forward(const ReducedSystem& reduced,
                                  const std::vector<OperatorElement>& phi,
                                  const std::vector<OperatorElement>& x);

/// The reverse direction: maps y back through x = P y and checks the
/// original first-order system A(x) = B x + phi componentwise.
VerificationReport reconstruct_and_verify(const ReducedSystem& reduced,
                                          const std::vector<OperatorElement>& y,
                                          const std::vector<OperatorElement>& phi,
                                          const Matrix& b);

/// Solves each block's higher-order recurrence forward on the shift
/// backend from the given initial values (one list per subsystem, block
/// size entries each), then derives the chain unknowns. The returned y
/// satisfies the reduced system by construction.
std::vector<OperatorElement> solve_reduced_shift(const ReducedSystem& reduced,
                                                 const std::vector<OperatorElement>& psi,
                                                 const std::vector<std::vector<Rational>>& initials);

}  // namespace opreduce
