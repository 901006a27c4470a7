#include <doctest.h>

#include "opreduce/canonical.hpp"
#include "opreduce/charpoly.hpp"
#include "opreduce/errors.hpp"
#include "opreduce/polymatrix.hpp"
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

void check_snf_contract(const Matrix& b) {
  PolyMatrix a = PolyMatrix::characteristic(b);
  SmithResult res = smith_normal_form(a);
  int n = a.size();

  CHECK(res.u * a * res.v == res.s);
  CHECK(res.u * res.u_inv == PolyMatrix::identity(n));
  CHECK(res.v * res.v_inv == PolyMatrix::identity(n));

  Polynomial du = determinant(res.u);
  REQUIRE(!du.is_zero());
  CHECK(*du.degree() == 0);
  Polynomial dv = determinant(res.v);
  REQUIRE(!dv.is_zero());
  CHECK(*dv.degree() == 0);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      CHECK(res.s.at(i, j).is_zero());
    }
  }
  for (int i = 0; i < n; ++i) {
    const Polynomial& d = res.s.at(i, i);
    REQUIRE(!d.is_zero());
    CHECK(d.is_monic());
    if (i + 1 < n) CHECK(d.divides(res.s.at(i + 1, i + 1)));
  }
}

void check_rcf_contract(const Matrix& b) {
  RcfResult rcf = rational_canonical_form(b);
  int n = b.size();
  CHECK(rcf.n == n);

  int total = 0;
  for (size_t i = 0; i < rcf.blocks.size(); ++i) {
    const auto& blk = rcf.blocks[i];
    CHECK(blk.poly.is_monic());
    CHECK(blk.size == *blk.poly.degree());
    CHECK(rcf.offsets[i] == total);
    total += blk.size;
    if (i + 1 < rcf.blocks.size()) CHECK(blk.poly.divides(rcf.blocks[i + 1].poly));
  }
  CHECK(total == n);

  CHECK(rcf.p * rcf.p_inv == Matrix::identity(n));
  CHECK(rcf.p_inv * b * rcf.p == rcf.canonical_matrix());

  Polynomial prod = Polynomial::constant(Rational(1));
  for (const auto& blk : rcf.blocks) prod = prod * blk.poly;
  CHECK(prod == charpoly_via_minors(b));
}

}  // namespace

TEST_CASE("companion matrix orientation") {
  CHECK(companion(P({2, -3, 1})) == M(2, {0, 1, -2, 3}));
  CHECK(companion(P({-7, 1})) == M(1, {7}));
  CHECK(companion(P({0, 0, 0, 1})) == M(3, {0, 1, 0, 0, 0, 1, 0, 0, 0}));
  CHECK_THROWS_AS(companion(P({1, 2})), InputError);
  CHECK_THROWS_AS(companion(P({1})), InputError);
}

TEST_CASE("companion matrix has its polynomial as characteristic polynomial") {
  testutil::TestRng rng(501);
  for (int it = 0; it < 40; ++it) {
    Polynomial p = rng.monic_poly(rng.int_in(1, 6));
    CHECK(charpoly_via_minors(companion(p)) == p);
  }
}

TEST_CASE("Smith form of known characteristic matrices") {
  SmithResult res = smith_normal_form(PolyMatrix::characteristic(M(2, {1, 1, 0, 2})));
  CHECK(res.s.at(0, 0) == P({1}));
  CHECK(res.s.at(1, 1) == P({2, -3, 1}));

  SmithResult eq = smith_normal_form(PolyMatrix::characteristic(M(2, {5, 0, 0, 5})));
  CHECK(eq.s.at(0, 0) == P({-5, 1}));
  CHECK(eq.s.at(1, 1) == P({-5, 1}));

  SmithResult id = smith_normal_form(PolyMatrix::identity(3));
  CHECK(id.s == PolyMatrix::identity(3));
  CHECK(id.u == PolyMatrix::identity(3));
  CHECK(id.v == PolyMatrix::identity(3));
}

TEST_CASE("Smith form contract on random matrices") {
  testutil::TestRng rng(502);
  for (int it = 0; it < 30; ++it) {
    check_snf_contract(rng.matrix(rng.int_in(1, 5)));
  }
}

TEST_CASE("canonical form of the worked 2x2") {
  RcfResult rcf = rational_canonical_form(M(2, {1, 1, 0, 2}));
  REQUIRE(rcf.blocks.size() == 1);
  CHECK(rcf.blocks[0].poly == P({2, -3, 1}));
  CHECK(rcf.canonical_matrix() == M(2, {0, 1, -2, 3}));
  CHECK(rcf.p_inv * M(2, {1, 1, 0, 2}) * rcf.p == M(2, {0, 1, -2, 3}));
}

TEST_CASE("a companion matrix is its own canonical form") {
  Polynomial p = P({2, -3, 1});
  RcfResult rcf = rational_canonical_form(companion(p));
  REQUIRE(rcf.blocks.size() == 1);
  CHECK(rcf.blocks[0].poly == p);
  CHECK(rcf.canonical_matrix() == companion(p));
}

TEST_CASE("scalar multiples of the identity split into 1x1 blocks") {
  RcfResult rcf = rational_canonical_form(M(2, {2, 0, 0, 2}));
  REQUIRE(rcf.blocks.size() == 2);
  CHECK(rcf.blocks[0].poly == P({-2, 1}));
  CHECK(rcf.blocks[1].poly == P({-2, 1}));
  CHECK(rcf.canonical_matrix() == M(2, {2, 0, 0, 2}));
}

TEST_CASE("canonical form contract on random matrices") {
  testutil::TestRng rng(503);
  for (int it = 0; it < 40; ++it) {
    check_rcf_contract(rng.matrix(rng.int_in(1, 6)));
  }
}

TEST_CASE("canonical form contract on matrices with prescribed blocks") {
  testutil::TestRng rng(504);
  for (int it = 0; it < 30; ++it) {
    int k = rng.int_in(2, 3);
    std::vector<int> degrees;
    int d = rng.int_in(1, 2);
    for (int i = 0; i < k; ++i) {
      degrees.push_back(d);
      d += rng.int_in(0, 2);
    }
    auto chain = rng.divisibility_chain(degrees);
    Matrix b = rng.with_blocks(chain);
    check_rcf_contract(b);

    RcfResult rcf = rational_canonical_form(b);
    REQUIRE(rcf.blocks.size() == chain.size());
    for (size_t i = 0; i < chain.size(); ++i) CHECK(rcf.blocks[i].poly == chain[i]);
  }
}

TEST_CASE("the form is idempotent") {
  testutil::TestRng rng(505);
  for (int it = 0; it < 25; ++it) {
    Matrix b = rng.matrix(rng.int_in(1, 5));
    RcfResult first = rational_canonical_form(b);
    RcfResult second = rational_canonical_form(first.canonical_matrix());
    REQUIRE(first.blocks.size() == second.blocks.size());
    for (size_t i = 0; i < first.blocks.size(); ++i)
      CHECK(first.blocks[i].poly == second.blocks[i].poly);
  }
}

TEST_CASE("the last block polynomial annihilates the matrix") {
  testutil::TestRng rng(506);
  for (int it = 0; it < 25; ++it) {
    Matrix b = rng.matrix(rng.int_in(1, 5));
    RcfResult rcf = rational_canonical_form(b);
    CHECK(eval_at_matrix(rcf.blocks.back().poly, b).is_zero());
  }
}
