#include <doctest.h>

#include "cayley/algebra.hpp"
#include "cayley/errors.hpp"
#include "cayley/random.hpp"
#include "cayley/representation.hpp"
#include "support.hpp"

using namespace cayley;
using namespace cayley::test;

namespace {

const Complex I(0.0, 1.0);

Mat2 random_scalar_mat(SplitMix64& rng) {
  return Mat2::scalar(rng.complex_unit_box(), rng.complex_unit_box(), rng.complex_unit_box(),
                      rng.complex_unit_box());
}

Mat2 random_mat(SplitMix64& rng, std::size_t d) {
  return Mat2(random_element(rng, d), random_element(rng, d), random_element(rng, d), random_element(rng, d));
}

}  // namespace

TEST_CASE("matrix construction") {
  CHECK(Mat2::identity(4)(0, 0) == Element::unit(4, 0));
  CHECK(Mat2::identity(4)(0, 1) == Element(4));
  CHECK(Mat2::zero(8).coeff_dim() == 8);
  CHECK(test::error_code([] { Mat2 m(Element(4), Element(4), Element(8), Element(4)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("identity is neutral for the nonstandard product") {
  SplitMix64 rng(51);
  const AlgebraSpec o = make_spec(Family::O, 0.0, 1.0);
  const Mat2 m = random_mat(rng, 8);
  CHECK(mat_mul_nonstandard(Mat2::identity(8), m, o) == m);
  CHECK(mat_mul_nonstandard(m, Mat2::identity(8), o) == m);
}

TEST_CASE("commuting entries give the ordinary product") {
  SplitMix64 rng(52);
  const AlgebraSpec scalar = *make_spec(Family::C, 0.0, 1.0).half();
  REQUIRE(scalar.family() == Family::Scalar);
  for (int t = 0; t < 100; ++t) {
    const Mat2 a = random_scalar_mat(rng), b = random_scalar_mat(rng);
    const Mat2 textbook = Mat2::scalar(a(0, 0)[0] * b(0, 0)[0] + a(0, 1)[0] * b(1, 0)[0],
                                       a(0, 0)[0] * b(0, 1)[0] + a(0, 1)[0] * b(1, 1)[0],
                                       a(1, 0)[0] * b(0, 0)[0] + a(1, 1)[0] * b(1, 0)[0],
                                       a(1, 0)[0] * b(0, 1)[0] + a(1, 1)[0] * b(1, 1)[0]);
    CHECK(relative_residual(mat_mul_nonstandard(a, b, scalar), textbook) < 1e-15);
    CHECK(relative_residual(mat_mul_standard(a, b, scalar), textbook) < 1e-15);
  }
}

TEST_CASE("row action") {
  SplitMix64 rng(53);
  const AlgebraSpec h = make_spec(Family::Q, 0.0, 1.0);
  const PairView pv(random_element(rng, 4), random_element(rng, 4));
  CHECK(act_row(pv, Mat2::identity(4), h) == pv);

  const Element k = Element::unit(4, 3), i = Element::unit(4, 1), zero(4);
  const PairView swapped = act_row(pv, Mat2(zero, k, k, zero), h);
  CHECK(swapped.first == multiply(h, k, pv.second));
  CHECK(swapped.second == multiply(h, k, pv.first));

  const PairView diag = act_row(pv, Mat2(i, zero, zero, -i), h);
  CHECK(diag.first == multiply(h, pv.first, i));
  CHECK(diag.second == multiply(h, pv.second, -i));
}

TEST_CASE("quadratic quaternion representation") {
  for (const Params& pq : random_params(54, 10)) {
    const RepSet r = rep_quadratic_quaternion(pq.p, pq.q);
    CHECK(r.mats[0] == Mat2::identity(1));
    CHECK(r.mats[2] == Mat2::scalar(0.0, 1.0, -pq.q, -pq.p));
  }
  const RepSet upper = rep_quadratic_quaternion(0.0, 1.0, Branch::Upper);
  const RepSet lower = rep_quadratic_quaternion(0.0, 1.0, Branch::Lower);
  CHECK(relative_residual(upper.mats[1], Mat2::scalar(-I, 0.0, 0.0, I)) < 1e-15);
  CHECK(relative_residual(lower.mats[1], Mat2::scalar(I, 0.0, 0.0, -I)) < 1e-15);
  CHECK(test::error_code([] { (void)rep_quadratic_quaternion(make_spec(Family::O, 0.0, 1.0)); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("quadratic representation is valid on both branches") {
  std::uint64_t seed = 55;
  for (const Params& pq : random_params(55, 20, 1e-3)) {
    for (Branch b : {Branch::Upper, Branch::Lower}) {
      const AlgebraSpec spec = make_spec(Family::Q, pq.p, pq.q, b);
      const RepReport r = verify_rep(rep_quadratic_quaternion(spec), spec, 50, ++seed, 1e-9);
      CHECK(r.passed());
      CHECK(r.action_checks == 200);
      CHECK(r.product_checks == 16);
    }
  }
}

TEST_CASE("degenerate quaternion parameters are flagged") {
  const AlgebraSpec spec = make_spec(Family::Q, 2.0, 1.0);
  const RepReport r = verify_rep(rep_quadratic_quaternion(spec), spec, 5, 1);
  CHECK(r.untrusted);
  CHECK_FALSE(r.passed());
}

TEST_CASE("octonion matrices") {
  const RepSet r = rep_octonion();
  const Element zero(4);
  const Element i = Element::unit(4, 1), k = Element::unit(4, 3), one = Element::unit(4, 0);
  CHECK(r.mats[1] == Mat2(i, zero, zero, -i));
  CHECK(r.mats[4] == Mat2(zero, one, -one, zero));
  CHECK(r.mats[7] == Mat2(zero, k, k, zero));
  const AlgebraSpec o = make_spec(Family::O, 0.0, 1.0);
  const RepReport rep = verify_rep(r, o, 200, 56, 1e-12);
  CHECK(rep.passed());
  CHECK(rep.max_action_residual == 0.0);
}

TEST_CASE("sedenion matrices") {
  const RepSet r = rep_sedenion();
  const Element zero(8), one = Element::unit(8, 0), o7 = Element::unit(8, 7);
  CHECK(r.mats[8] == Mat2(zero, one, -one, zero));
  CHECK(r.mats[15] == Mat2(zero, o7, o7, zero));
  const AlgebraSpec oct = make_spec(Family::O, 0.0, 1.0);
  CHECK(mat_mul_nonstandard(r.mats[1], r.mats[8], oct) == r.mats[9]);
  CHECK(mat_mul_nonstandard(r.mats[9], r.mats[1], oct) == r.mats[8]);
}

TEST_CASE("unit matrices multiply like the units") {
  for (const RepSet& r : {rep_octonion(), rep_sedenion()}) {
    const std::size_t d = r.mats.size();
    const AlgebraSpec target = make_spec(d == 8 ? Family::O : Family::S, 0.0, 1.0);
    const Mat2 minus_one = Complex(-1.0) * Mat2::identity(r.coeff_spec.dim());
    for (std::size_t a = 0; a < d; ++a) {
      if (a > 0) CHECK(mat_mul_nonstandard(r.mats[a], r.mats[a], r.coeff_spec) == minus_one);
      for (std::size_t b = 0; b < d; ++b) {
        CHECK(mat_mul_nonstandard(r.mats[a], r.mats[b], r.coeff_spec) ==
              represent(r, basis_product(target, a, b)));
      }
    }
  }
}

TEST_CASE("sedenion row action is the doubling product") {
  const RepSet r = rep_sedenion();
  const AlgebraSpec s = make_spec(Family::S, 0.0, 1.0);
  const RepReport rep = verify_rep(r, s, 100, 57, 1e-12);
  CHECK(rep.passed());
  CHECK(rep.product_checks == 256);
  SplitMix64 rng(57);
  const Element x = random_element(rng, 16);
  for (std::size_t m = 0; m < 16; ++m) {
    const PairView acted = act_row(split(x), r.mats[m], r.coeff_spec);
    CHECK(relative_residual(join(acted), multiply(s, x, Element::unit(16, m))) < 1e-14);
  }
}

TEST_CASE("represent is linear") {
  SplitMix64 rng(58);
  const RepSet r = rep_octonion();
  const Element x = random_element(rng, 8), y = random_element(rng, 8);
  CHECK(relative_residual(represent(r, x + y), represent(r, x) + represent(r, y)) < 1e-15);
  CHECK(test::error_code([&] { (void)represent(r, Element(4)); }) == ErrorCode::DimensionMismatch);
}
