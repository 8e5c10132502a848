#include <doctest.h>

#include <array>

#include "cayley/algebra.hpp"
#include "cayley/analysis.hpp"
#include "cayley/errors.hpp"
#include "cayley/random.hpp"
#include "support.hpp"

using namespace cayley;
using namespace cayley::test;

namespace {

constexpr std::array<std::array<int, 3>, 7> kTriples{
    {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

// Sign and third index of e_i e_j among imaginary units, typed out here
// separately from the library.
std::pair<int, int> oriented(std::size_t dim, int i, int j) {
  for (const auto& t : kTriples) {
    if (dim == 4 && t != kTriples[0]) continue;
    for (int r = 0; r < 3; ++r) {
      const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
      if (i == a && j == b) return {1, c};
      if (i == b && j == a) return {-1, c};
    }
  }
  return {0, 0};
}

CVec unit_product_oracle(std::size_t dim, Complex p, Complex q, int i, int j) {
  CVec out(dim);
  if (i == 0 || j == 0) {
    out[i + j] = 1.0;
    return out;
  }
  const Complex d = p * p / 4.0 - q;
  const Complex s = std::sqrt(-d);
  if (i == j) {
    out[0] = -q;
    out[i] = -p;
    return out;
  }
  const auto [eps, k] = oriented(dim, i, j);
  out[0] = static_cast<double>(eps) * (p / 2.0) * s - p * p / 4.0;
  out[i] += -p / 2.0;
  out[j] += -p / 2.0;
  if (eps != 0) out[k] += static_cast<double>(eps) * s;
  return out;
}

Element doubled(const AlgebraSpec& spec, const Element& x, const Element& y) {
  return pair_to_units(spec, cd_product(spec, units_to_pair(spec, x), units_to_pair(spec, y)));
}

}  // namespace

TEST_CASE("families, dimensions and names") {
  CHECK(dimension_of(Family::C) == 2);
  CHECK(dimension_of(Family::Q) == 4);
  CHECK(dimension_of(Family::O) == 8);
  CHECK(dimension_of(Family::S) == 16);
  CHECK(parse_family("O") == Family::O);
  CHECK_FALSE(parse_family("X").has_value());
  CHECK(parse_branch("lower") == Branch::Lower);
  CHECK(sign_of(Branch::Lower) == -1);
}

TEST_CASE("levi-civita symbol") {
  for (const auto& t : kTriples) {
    const std::size_t i = t[0], j = t[1], k = t[2];
    CHECK(levi_civita(8, i, j, k) == 1);
    CHECK(levi_civita(8, j, k, i) == 1);
    CHECK(levi_civita(8, j, i, k) == -1);
  }
  CHECK(levi_civita(4, 1, 2, 3) == 1);
  CHECK(levi_civita(4, 1, 4, 5) == 0);
  CHECK(levi_civita(8, 1, 2, 4) == 0);
  CHECK(levi_civita(8, 0, 1, 1) == 0);
}

TEST_CASE("hamilton spec") {
  const AlgebraSpec h = make_spec(Family::Q, 0.0, 1.0);
  CHECK(h.discriminant() == Complex(-1.0));
  CHECK(h.sqrt_neg_d() == Complex(1.0));
  CHECK(std::abs(h.sqrt_d() * h.sqrt_d() - h.discriminant()) < 1e-15);
  CHECK(basis_product(h, 1, 2) == Element::unit(4, 3));
  CHECK(multiply(h, Element::unit(4, 2), Element::unit(4, 1)) == -Element::unit(4, 3));
  REQUIRE(h.half() != nullptr);
  CHECK(h.half()->family() == Family::C);
  CHECK(h.half()->half()->family() == Family::Scalar);
}

TEST_CASE("two-dimensional tables") {
  const AlgebraSpec dual = make_spec(Family::C, 0.0, 0.0);
  CHECK(basis_product(dual, 1, 1) == Element(2));

  const AlgebraSpec c = make_spec(Family::C, 0.0, 1.0);
  const Element x{1.0, 1.0}, y{1.0, -1.0};
  CHECK(multiply(c, x, y) == Element{2.0, 0.0});

  for (const Params& pq : random_params(21, 20)) {
    const AlgebraSpec spec = make_spec(Family::C, pq.p, pq.q);
    CHECK(basis_product(spec, 1, 1) == Element{-pq.q, -pq.p});
  }
}

TEST_CASE("unit products") {
  const AlgebraSpec o = make_spec(Family::O, 0.0, 1.0);
  CHECK(basis_product(o, 3, 4) == Element::unit(8, 7));
  CHECK(basis_product(make_spec(Family::Q, 0.0, 0.0), 1, 2) == Element(4));
  for (std::size_t m = 0; m < 16; ++m) {
    const AlgebraSpec s = make_spec(Family::S, Complex(0.3, 0.1), Complex(-0.5, 0.4));
    CHECK(basis_product(s, 0, m) == Element::unit(16, m));
    CHECK(basis_product(s, m, 0) == Element::unit(16, m));
  }
  CHECK(test::error_code([&] { (void)basis_product(o, 8, 0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("tables agree with the typed-out unit formula") {
  for (const Params& pq : random_params(22, 10)) {
    for (Family f : {Family::Q, Family::O}) {
      const AlgebraSpec spec = make_spec(f, pq.p, pq.q);
      const int dim = static_cast<int>(spec.dim());
      double worst = 0.0;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          worst = std::max(worst, max_diff(to_vec(basis_product(spec, i, j)),
                                           unit_product_oracle(spec.dim(), pq.p, pq.q, i, j)));
      CHECK(worst < 1e-14);
    }
  }
}

TEST_CASE("reference products at p = 0, q = 1") {
  SplitMix64 rng(23);
  const AlgebraSpec h = make_spec(Family::Q, 0.0, 1.0);
  const AlgebraSpec o = make_spec(Family::O, 0.0, 1.0);
  const AlgebraSpec s = make_spec(Family::S, 0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const Element a4 = random_element(rng, 4), b4 = random_element(rng, 4);
    CHECK(max_diff(to_vec(multiply(h, a4, b4)), hamilton(to_vec(a4), to_vec(b4))) < 1e-14);
    const Element a8 = random_element(rng, 8), b8 = random_element(rng, 8);
    CHECK(max_diff(to_vec(multiply(o, a8, b8)), cd_standard(to_vec(a8), to_vec(b8))) < 1e-14);
    const Element a16 = random_element(rng, 16), b16 = random_element(rng, 16);
    CHECK(max_diff(to_vec(multiply(s, a16, b16)), cd_standard(to_vec(a16), to_vec(b16))) < 1e-13);
  }
}

TEST_CASE("complex family against the polynomial ring") {
  SplitMix64 rng(24);
  for (const Params& pq : random_params(24, 20)) {
    const AlgebraSpec spec = make_spec(Family::C, pq.p, pq.q);
    for (int t = 0; t < 20; ++t) {
      const Element x = random_element(rng, 2), y = random_element(rng, 2);
      CHECK(max_diff(to_vec(multiply(spec, x, y)), polynomial_product(to_vec(x), to_vec(y), pq.p, pq.q)) <
            1e-14);
    }
  }
}

TEST_CASE("products are bilinear and e0 is the identity") {
  SplitMix64 rng(25);
  for (const Params& pq : random_params(25, 5)) {
    for (Family f : {Family::C, Family::Q, Family::O, Family::S}) {
      const AlgebraSpec spec = make_spec(f, pq.p, pq.q);
      const std::size_t d = spec.dim();
      const Element x = random_element(rng, d), x2 = random_element(rng, d), y = random_element(rng, d);
      const Complex a = rng.complex_unit_box(), b = rng.complex_unit_box();
      CHECK(relative_residual(multiply(spec, a * x + b * x2, y),
                              a * multiply(spec, x, y) + b * multiply(spec, x2, y)) < 1e-13);
      CHECK(relative_residual(multiply(spec, y, a * x + b * x2),
                              a * multiply(spec, y, x) + b * multiply(spec, y, x2)) < 1e-13);
      const Element one = Element::unit(d, 0);
      CHECK(relative_residual(multiply(spec, one, x), x) < 1e-15);
      CHECK(relative_residual(multiply(spec, x, one), x) < 1e-15);
    }
  }
  const AlgebraSpec q = make_spec(Family::Q, 0.0, 1.0);
  CHECK(test::error_code([&] { (void)multiply(q, Element(4), Element(8)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("imaginary units square to -q e0 - p e_i") {
  for (const Params& pq : random_params(26, 10)) {
    for (Family f : {Family::C, Family::Q, Family::O}) {
      const AlgebraSpec spec = make_spec(f, pq.p, pq.q);
      for (std::size_t i = 1; i < spec.dim(); ++i) {
        Element expected(spec.dim());
        expected[0] = -pq.q;
        expected[i] = -pq.p;
        CHECK(relative_residual(basis_product(spec, i, i), expected) < 1e-14);
      }
    }
    const AlgebraSpec s = make_spec(Family::S, pq.p, pq.q);
    Element expected(16);
    expected[0] = -pq.q;
    expected[8] = -pq.p;
    CHECK(relative_residual(basis_product(s, 8, 8), expected) < 1e-14);
  }
}

TEST_CASE("doubling product examples") {
  const AlgebraSpec q = make_spec(Family::Q, Complex(0.7, 0.2), Complex(-1.1, 0.3));
  const Element one = Element::unit(2, 0), zero(2);
  CHECK(cd_product(q, {one, zero}, {one, zero}) == PairView(one, zero));
  const PairView tilde_sq = cd_product(q, {zero, one}, {zero, one});
  CHECK(relative_residual(tilde_sq.first, Element::scalar(2, -q.q())) < 1e-15);
  CHECK(relative_residual(tilde_sq.second, Element::scalar(2, -q.p())) < 1e-15);

  const AlgebraSpec o = make_spec(Family::O, 0.0, 1.0);
  const PairView e5 = cd_product(o, {Element::unit(4, 1), Element(4)}, {Element(4), Element::unit(4, 0)});
  CHECK(e5 == PairView(Element(4), Element::unit(4, 1)));
  CHECK(join(e5) == Element::unit(8, 5));
}

TEST_CASE("doubling reproduces every table") {
  SplitMix64 rng(27);
  for (const Params& pq : random_params(27, 30, 0.05)) {
    for (Family f : {Family::C, Family::Q, Family::O}) {
      const AlgebraSpec spec = make_spec(f, pq.p, pq.q);
      for (int t = 0; t < 10; ++t) {
        const Element x = random_element(rng, spec.dim()), y = random_element(rng, spec.dim());
        CHECK(relative_residual(multiply(spec, x, y), doubled(spec, x, y)) < 1e-12);
      }
    }
  }
  // At p = 0 every √(-D) works, including nearly singular ones.
  const AlgebraSpec p0 = make_spec(Family::O, 0.0, Complex(1e-4, 0.0));
  const Element x = random_element(rng, 8), y = random_element(rng, 8);
  CHECK(relative_residual(multiply(p0, x, y), doubled(p0, x, y)) < 1e-9);
}

TEST_CASE("pair and unit coordinates") {
  const AlgebraSpec h = make_spec(Family::Q, 0.0, 1.0);
  const Element x{1.0, 2.0, 3.0, 4.0};
  CHECK(pair_to_units(h, split(x)) == x);
  CHECK(units_to_pair(h, x) == split(x));

  SplitMix64 rng(28);
  for (const Params& pq : random_params(28, 20, 0.05)) {
    const AlgebraSpec q = make_spec(Family::Q, pq.p, pq.q);
    const Element x3 = pair_to_units(q, {Element(2), Element{0.0, 2.5}});
    CHECK(std::abs(x3[3] - q.sqrt_neg_d() * 2.5) < 1e-14);
    for (Family f : {Family::Q, Family::O}) {
      const AlgebraSpec spec = make_spec(f, pq.p, pq.q);
      const Element r = random_element(rng, spec.dim());
      CHECK(relative_residual(pair_to_units(spec, units_to_pair(spec, r)), r) < 1e-12);
    }
  }
}

TEST_CASE("transform errors") {
  const AlgebraSpec degenerate = make_spec(Family::Q, 2.0, 1.0);
  CHECK(std::abs(degenerate.discriminant()) < 1e-15);
  CHECK(test::error_code([&] { (void)units_to_pair(degenerate, Element::unit(4, 3)); }) ==
        ErrorCode::SingularParameter);
  CHECK(test::error_code([&] {
          (void)pair_to_units(degenerate, split(Element::unit(4, 3)), true);
        }) == ErrorCode::SingularParameter);
  CHECK_FALSE(test::error_code([&] { (void)pair_to_units(degenerate, split(Element::unit(4, 3))); }));

  const AlgebraSpec s = make_spec(Family::S, 0.5, 1.0);
  CHECK(test::error_code([&] { (void)units_to_pair(s, Element(16)); }) == ErrorCode::UnsupportedTransform);
  const AlgebraSpec s0 = make_spec(Family::S, 0.0, 2.0);
  const Element e = Element::unit(16, 11);
  CHECK(pair_to_units(s0, units_to_pair(s0, e)) == e);
}

TEST_CASE("spec construction errors") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(test::error_code([&] { (void)make_spec(Family::Q, inf, 1.0); }) == ErrorCode::InvalidArgument);
  CHECK(test::error_code([] { (void)make_spec_with_root(Family::Q, 0.0, 1.0, 2.0); }) ==
        ErrorCode::InvalidArgument);
  const AlgebraSpec neg = make_spec_with_root(Family::Q, 0.0, 1.0, -1.0);
  CHECK(basis_product(neg, 1, 2) == -Element::unit(4, 3));
}

TEST_CASE("generated sedenion table is exact at p = 0, q = 1") {
  const AlgebraSpec s = make_spec(Family::S, 0.0, 1.0);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      const CVec expected = cd_standard(to_vec(Element::unit(16, i)), to_vec(Element::unit(16, j)));
      CHECK(to_vec(s.table().entry(i, j)) == expected);
    }
  }
}
