#include <doctest.h>

#include "opreduce/errors.hpp"
#include "opreduce/operators.hpp"
#include "opreduce/reduction.hpp"
#include "testutil.hpp"

using namespace opreduce;

namespace {

Matrix M(int n, std::initializer_list<long> row_major) {
  std::vector<Rational> e;
  for (long v : row_major) e.push_back(Rational(v));
  return Matrix(n, std::move(e));
}

Polynomial P(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.push_back(Rational(v));
  return Polynomial(std::move(c));
}

OperatorElement E(Backend backend, std::initializer_list<long> vals) {
  std::vector<Rational> v;
  for (long x : vals) v.push_back(Rational(x));
  return OperatorElement(backend, std::move(v));
}

std::vector<OperatorElement> zeros(Backend backend, int n, int len) {
  return std::vector<OperatorElement>(static_cast<size_t>(n), zero_element(backend, len));
}

}  // namespace

TEST_CASE("shift application drops the first value") {
  OperatorElement x = E(Backend::shift, {3, 1, 4, 1, 5});
  CHECK(x.apply() == E(Backend::shift, {1, 4, 1, 5}));
  CHECK(x.apply().apply() == E(Backend::shift, {4, 1, 5}));
}

TEST_CASE("derivative application multiplies by the exponent") {
  std::vector<Rational> c{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)};
  OperatorElement x(Backend::dseries, c);
  CHECK(x.apply() ==
        OperatorElement(Backend::dseries, {Rational(1), Rational(1), Rational(1, 2)}));
}

TEST_CASE("exhausted elements fail loudly") {
  OperatorElement x = E(Backend::shift, {7});
  OperatorElement empty = x.apply();
  CHECK(empty.length() == 0);
  CHECK_THROWS_AS(empty.apply(), InputError);
  CHECK_THROWS_AS(empty.at(0), InputError);
}

TEST_CASE("arithmetic works on the common window and rejects mixed backends") {
  OperatorElement a = E(Backend::shift, {1, 2, 3});
  OperatorElement b = E(Backend::shift, {10, 20});
  CHECK(a + b == E(Backend::shift, {11, 22}));
  CHECK(a - b == E(Backend::shift, {-9, -18}));
  CHECK(a.scaled(Rational(-2)) == E(Backend::shift, {-2, -4, -6}));
  CHECK_THROWS_AS(a + E(Backend::dseries, {1, 2}), InputError);
}

TEST_CASE("iterating a zero system holds the fixed point") {
  auto x = iterate_system(M(1, {0}), zeros(Backend::shift, 1, 10), {Rational(9)}, 10);
  REQUIRE(x.size() == 1);
  CHECK(x[0].length() == 11);
  CHECK(x[0].at(0) == Rational(9));
  for (int t = 1; t <= 10; ++t) CHECK(x[0].at(t) == Rational(0));
}

TEST_CASE("iterating the unit system with constant forcing counts steps") {
  std::vector<OperatorElement> phi{
      OperatorElement(Backend::shift, std::vector<Rational>(12, Rational(1)))};
  auto x = iterate_system(M(1, {1}), phi, {Rational(0)}, 12);
  for (int t = 0; t <= 12; ++t) CHECK(x[0].at(t) == Rational(t));
}

TEST_CASE("iteration output satisfies the step recurrence") {
  testutil::TestRng rng(701);
  for (int it = 0; it < 20; ++it) {
    int n = rng.int_in(1, 4);
    Matrix b = rng.matrix(n);
    int steps = 8;
    std::vector<OperatorElement> phi;
    for (int i = 0; i < n; ++i) phi.emplace_back(Backend::shift, rng.vec(steps));
    auto x = iterate_system(b, phi, rng.vec(n), steps);
    for (int t = 0; t < steps; ++t) {
      std::vector<Rational> cur;
      for (int i = 0; i < n; ++i) cur.push_back(x[static_cast<size_t>(i)].at(t));
      std::vector<Rational> next = b.apply(cur);
      for (int i = 0; i < n; ++i) {
        CHECK(x[static_cast<size_t>(i)].at(t + 1) ==
              next[static_cast<size_t>(i)] + phi[static_cast<size_t>(i)].at(t));
      }
    }
  }
}

TEST_CASE("iteration rejects short windows") {
  CHECK_THROWS_AS(iterate_system(M(1, {1}), zeros(Backend::shift, 1, 3), {Rational(0)}, 5),
                  InputError);
}

TEST_CASE("series integration solves the exponential") {
  auto x = integrate_system(M(1, {1}), zeros(Backend::dseries, 1, 8), {Rational(1)}, 8);
  Rational factorial(1);
  for (int t = 0; t <= 8; ++t) {
    if (t > 0) factorial *= Rational(t);
    CHECK(x[0].at(t) == Rational(1) / factorial);
  }
}

TEST_CASE("series integration satisfies the derivative equation") {
  testutil::TestRng rng(702);
  for (int it = 0; it < 15; ++it) {
    int n = rng.int_in(1, 4);
    Matrix b = rng.matrix(n);
    int degree = 8;
    std::vector<OperatorElement> phi;
    for (int i = 0; i < n; ++i) phi.emplace_back(Backend::dseries, rng.vec(degree));
    auto x = integrate_system(b, phi, rng.vec(n), degree);
    for (int i = 0; i < n; ++i) {
      OperatorElement lhs = x[static_cast<size_t>(i)].apply();
      OperatorElement rhs = zero_element(Backend::dseries, degree + 1);
      for (int j = 0; j < n; ++j)
        rhs = rhs + x[static_cast<size_t>(j)].scaled(b.at(i, j));
      rhs = rhs + phi[static_cast<size_t>(i)];
      CHECK((lhs - rhs).all_zero());
    }
  }
}

TEST_CASE("operator polynomials evaluate pointwise") {
  OperatorElement shift_x = E(Backend::shift, {0, 1, 2, 3, 4});
  CHECK(apply_operator_poly(P({0, 1}), shift_x) == shift_x.apply());

  std::vector<Rational> powers;
  Rational v(1);
  for (int t = 0; t < 6; ++t) {
    powers.push_back(v);
    v *= Rational(2);
  }
  OperatorElement doubling(Backend::shift, powers);
  OperatorElement res = apply_operator_poly(P({-1, 1}), doubling);
  CHECK(res.length() == 5);
  for (int t = 0; t < 5; ++t) CHECK(res.at(t) == powers[static_cast<size_t>(t)]);

  OperatorElement series(Backend::dseries, {Rational(1), Rational(1), Rational(1, 2)});
  OperatorElement second = apply_operator_poly(P({0, 0, 1}), series);
  CHECK(second == OperatorElement(Backend::dseries, std::vector<Rational>{Rational(1)}));

  CHECK_THROWS_AS(apply_operator_poly(P({0, 0, 1}), E(Backend::shift, {1, 2})), InputError);
  CHECK(apply_operator_poly(Polynomial(), shift_x).all_zero());
}

TEST_CASE("operator polynomial application is a ring homomorphism") {
  testutil::TestRng rng(703);
  for (int it = 0; it < 30; ++it) {
    Polynomial p = rng.poly(rng.int_in(0, 3));
    Polynomial q = rng.poly(rng.int_in(0, 3));
    Backend backend = (it % 2 == 0) ? Backend::shift : Backend::dseries;
    OperatorElement x(backend, rng.vec(12));
    OperatorElement combined = apply_operator_poly(p * q, x);
    OperatorElement nested = apply_operator_poly(p, apply_operator_poly(q, x));
    CHECK(combined.truncated(nested.length()) == nested);
  }
}

TEST_CASE("rhs evaluation on worked inputs") {
  RhsTable unit = rhs_table(P({-4, 1}));
  OperatorElement psi = E(Backend::shift, {5, 6, 7});
  CHECK(evaluate_rhs(unit, {psi}) == psi);

  RhsTable quad = rhs_table(P({2, -3, 1}));
  CHECK(evaluate_rhs(quad, zeros(Backend::shift, 2, 6)).all_zero());

  std::vector<Rational> ramp;
  for (int t = 0; t < 8; ++t) ramp.push_back(Rational(t));
  OperatorElement psi1(Backend::shift, ramp);
  OperatorElement psi2 = zero_element(Backend::shift, 8);
  OperatorElement rhs = evaluate_rhs(quad, {psi1, psi2});
  CHECK(rhs.length() == 7);
  for (int t = 0; t < 7; ++t) CHECK(rhs.at(t) == Rational(1 - 2 * t));

  CHECK_THROWS_AS(evaluate_rhs(quad, {psi1}), InputError);
  CHECK_THROWS_AS(evaluate_rhs(quad, {E(Backend::shift, {1}), E(Backend::shift, {1})}),
                  InputError);
}

TEST_CASE("forward verification accepts true solutions") {
  testutil::TestRng rng(704);
  for (int it = 0; it < 15; ++it) {
    int n = rng.int_in(1, 4);
    Matrix b = rng.matrix(n);
    int steps = 12;
    std::vector<OperatorElement> phi;
    for (int i = 0; i < n; ++i) phi.emplace_back(Backend::shift, rng.vec(steps));
    auto x = iterate_system(b, phi, rng.vec(n), steps);
    VerificationReport report = verify_forward(b, phi, x);
    CHECK(report.ok());
    for (const auto& ss : report.subsystems) CHECK(ss.clean());
  }
}

TEST_CASE("forward verification of the homogeneous worked 2x2") {
  Matrix b = M(2, {1, 1, 0, 2});
  auto phi = zeros(Backend::shift, 2, 20);
  auto x = iterate_system(b, phi, {Rational(3), Rational(-2)}, 20);
  CHECK(verify_forward(b, phi, x).ok());
}

TEST_CASE("scalar matrices verify componentwise") {
  Matrix b = M(3, {4, 0, 0, 0, 4, 0, 0, 0, 4});
  testutil::TestRng rng(705);
  std::vector<OperatorElement> phi;
  for (int i = 0; i < 3; ++i) phi.emplace_back(Backend::shift, rng.vec(10));
  auto x = iterate_system(b, phi, rng.vec(3), 10);
  VerificationReport report = verify_forward(b, phi, x);
  CHECK(report.ok());
  CHECK(report.subsystems.size() == 3);
}

TEST_CASE("perturbed solutions produce located residuals, not errors") {
  Matrix b = M(2, {1, 1, 0, 2});
  auto phi = zeros(Backend::shift, 2, 15);
  auto x = iterate_system(b, phi, {Rational(1), Rational(1)}, 15);
  std::vector<Rational> tampered = x[1].values();
  tampered[7] += Rational(1);
  x[1] = OperatorElement(Backend::shift, tampered);
  VerificationReport report = verify_forward(b, phi, x);
  CHECK_FALSE(report.ok());
  CHECK(report.first_failure().has_value());
}

TEST_CASE("verification on the derivative backend") {
  testutil::TestRng rng(706);
  for (int it = 0; it < 10; ++it) {
    int n = rng.int_in(1, 4);
    Matrix b = rng.matrix(n);
    int degree = 12;
    std::vector<OperatorElement> phi;
    for (int i = 0; i < n; ++i) phi.emplace_back(Backend::dseries, rng.vec(degree));
    auto x = integrate_system(b, phi, rng.vec(n), degree);
    CHECK(verify_forward(b, phi, x).ok());
  }
}

TEST_CASE("short windows are rejected with input errors") {
  Matrix b = M(2, {1, 1, 0, 2});
  auto phi = zeros(Backend::shift, 2, 2);
  std::vector<OperatorElement> x = zeros(Backend::shift, 2, 2);
  CHECK_THROWS_AS(verify_forward(b, phi, x), InputError);
}

TEST_CASE("reconstruction maps reduced solutions to system solutions") {
  testutil::TestRng rng(707);
  for (int it = 0; it < 15; ++it) {
    int n = rng.int_in(1, 4);
    Matrix b = rng.matrix(n);
    int steps = 12;
    std::vector<OperatorElement> phi;
    for (int i = 0; i < n; ++i) phi.emplace_back(Backend::shift, rng.vec(steps));
    auto x = iterate_system(b, phi, rng.vec(n), steps);

    ReducedSystem red = partially_reduce(b);
    auto y = apply_matrix(red.p_inv, x);
    VerificationReport report = reconstruct_and_verify(red, y, phi, b);
    CHECK(report.ok());
  }
}

TEST_CASE("solving the reduced system yields verified solutions") {
  testutil::TestRng rng(708);
  for (int it = 0; it < 15; ++it) {
    int n = rng.int_in(1, 4);
    Matrix b = rng.matrix(n);
    int window = 12;
    std::vector<OperatorElement> phi;
    for (int i = 0; i < n; ++i) phi.emplace_back(Backend::shift, rng.vec(window));

    ReducedSystem red = partially_reduce(b);
    auto psi = apply_matrix(red.p_inv, phi);
    std::vector<std::vector<Rational>> initials;
    for (const auto& ss : red.subsystems) initials.push_back(rng.vec(ss.size()));

    auto y = solve_reduced_shift(red, psi, initials);
    CHECK(reconstruct_and_verify(red, y, phi, b).ok());

    auto x = apply_matrix(red.p, y);
    CHECK(verify_forward(red, phi, x).ok());
  }
}

TEST_CASE("zero reduced solution of the homogeneous system reconstructs to zero") {
  Matrix b = M(2, {1, 1, 0, 2});
  ReducedSystem red = partially_reduce(b);
  auto y = zeros(Backend::shift, 2, 10);
  auto phi = zeros(Backend::shift, 2, 10);
  VerificationReport report = reconstruct_and_verify(red, y, phi, b);
  CHECK(report.ok());
}
