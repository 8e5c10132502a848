#include "cayley/representation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cayley/errors.hpp"
#include "cayley/random.hpp"

namespace cayley {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_coeff_dim(std::size_t dim, const AlgebraSpec& coeff_spec) {
  if (dim != coeff_spec.dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "matrix entries do not belong to the coefficient algebra");
  }
}

std::vector<std::string> unit_labels(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < count; ++m) labels.push_back("e" + std::to_string(m));
  return labels;
}

// e_0 ↔ I; e_u ↔ diag(u, -u); e_h ↔ (0 1; -1 0); e_{h+u} ↔ (0 u; u 0).
RepSet doubled_unit_reps(const AlgebraSpec& coeff_spec) {
  const std::size_t h = coeff_spec.dim();
  const Element zero(h);
  const Element one = Element::unit(h, 0);
  RepSet reps{coeff_spec, {}, unit_labels(2 * h), std::nullopt};
  reps.mats.push_back(Mat2::identity(h));
  for (std::size_t u = 1; u < h; ++u) {
    const Element e = Element::unit(h, u);
    reps.mats.emplace_back(e, zero, zero, -e);
  }
  reps.mats.emplace_back(zero, one, -one, zero);
  for (std::size_t u = 1; u < h; ++u) {
    const Element e = Element::unit(h, u);
    reps.mats.emplace_back(zero, e, e, zero);
  }
  return reps;
}

Complex embed(const Element& c, Complex lambda) {
  return c.dim() == 1 ? c[0] : c[0] + c[1] * lambda;
}

}  // namespace

Mat2::Mat2(Element m11, Element m12, Element m21, Element m22)
    : entries_{{{std::move(m11), std::move(m12)}, {std::move(m21), std::move(m22)}}} {
  const std::size_t d = entries_[0][0].dim();
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (e.dim() != d) {
        throw AlgebraError(ErrorCode::DimensionMismatch, "matrix entries must share one dim");
      }
    }
  }
}

Mat2 Mat2::identity(std::size_t coeff_dim) {
  return Mat2(Element::unit(coeff_dim, 0), Element(coeff_dim), Element(coeff_dim),
              Element::unit(coeff_dim, 0));
}

Mat2 Mat2::zero(std::size_t coeff_dim) {
  return Mat2(Element(coeff_dim), Element(coeff_dim), Element(coeff_dim), Element(coeff_dim));
}

Mat2 Mat2::scalar(Complex m11, Complex m12, Complex m21, Complex m22) {
  return Mat2(Element{m11}, Element{m12}, Element{m21}, Element{m22});
}

Mat2& Mat2::operator+=(const Mat2& other) {
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) entries_[r][c] += other.entries_[r][c];
  return *this;
}

Mat2 operator*(Complex s, Mat2 m) {
  for (auto& row : m.entries_)
    for (auto& e : row) e *= s;
  return m;
}

double relative_residual(const Mat2& a, const Mat2& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) worst = std::max(worst, relative_residual(a(r, c), b(r, c)));
  return worst;
}

Mat2 mat_mul_nonstandard(const Mat2& a, const Mat2& b, const AlgebraSpec& coeff_spec) {
  require_coeff_dim(a.coeff_dim(), coeff_spec);
  require_coeff_dim(b.coeff_dim(), coeff_spec);
  const auto m = [&coeff_spec](const Element& x, const Element& y) {
    return multiply(coeff_spec, x, y);
  };
  return Mat2(m(a(0, 0), b(0, 0)) + m(b(1, 0), a(0, 1)), m(b(0, 1), a(0, 0)) + m(a(0, 1), b(1, 1)),
              m(b(0, 0), a(1, 0)) + m(a(1, 1), b(1, 0)), m(a(1, 0), b(0, 1)) + m(b(1, 1), a(1, 1)));
}

Mat2 mat_mul_standard(const Mat2& a, const Mat2& b, const AlgebraSpec& coeff_spec) {
  require_coeff_dim(a.coeff_dim(), coeff_spec);
  require_coeff_dim(b.coeff_dim(), coeff_spec);
  const auto m = [&coeff_spec](const Element& x, const Element& y) {
    return multiply(coeff_spec, x, y);
  };
  return Mat2(m(a(0, 0), b(0, 0)) + m(a(0, 1), b(1, 0)), m(a(0, 0), b(0, 1)) + m(a(0, 1), b(1, 1)),
              m(a(1, 0), b(0, 0)) + m(a(1, 1), b(1, 0)), m(a(1, 0), b(0, 1)) + m(a(1, 1), b(1, 1)));
}

PairView act_row(const PairView& pair, const Mat2& m, const AlgebraSpec& coeff_spec) {
  require_coeff_dim(pair.half_dim(), coeff_spec);
  require_coeff_dim(m.coeff_dim(), coeff_spec);
  const Element& a1 = pair.first;
  const Element& a2 = pair.second;
  return PairView(multiply(coeff_spec, a1, m(0, 0)) + multiply(coeff_spec, m(1, 0), a2),
                  multiply(coeff_spec, m(0, 1), a1) + multiply(coeff_spec, a2, m(1, 1)));
}

Mat2 represent(const RepSet& reps, const Element& x) {
  if (x.dim() != reps.mats.size()) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "element does not match representation size");
  }
  Mat2 out = Mat2::zero(reps.coeff_spec.dim());
  for (std::size_t m = 0; m < x.dim(); ++m) {
    if (x[m] != Complex{}) out += x[m] * reps.mats[m];
  }
  return out;
}

RepSet rep_quadratic_quaternion(const AlgebraSpec& spec) {
  if (spec.family() != Family::Q) {
    throw AlgebraError(ErrorCode::InvalidArgument, "quadratic representation needs a Q(p,q) spec");
  }
  const Complex p = spec.p();
  const Complex q = spec.q();
  const Complex sqrt_d = spec.sqrt_d();
  const double s = sign_of(spec.branch());
  const Complex lambda = -p / 2.0 + s * sqrt_d;

  RepSet reps{make_spec(Family::Scalar, 0.0, 1.0), {}, unit_labels(4), lambda};
  reps.mats.push_back(Mat2::identity(1));
  reps.mats.push_back(Mat2::scalar(lambda, 0.0, -s * p * sqrt_d, -p / 2.0 - s * sqrt_d));
  reps.mats.push_back(Mat2::scalar(0.0, 1.0, -q, -p));
  reps.mats.push_back(Mat2::scalar((-1.0 - s * kI) * p / 2.0, -s * kI,
                                   s * kI * (p * p / 2.0 - q), (-1.0 + s * kI) * p / 2.0));
  return reps;
}

RepSet rep_quadratic_quaternion(Complex p, Complex q, Branch branch) {
  return rep_quadratic_quaternion(make_spec(Family::Q, p, q, branch));
}

RepSet rep_octonion() { return doubled_unit_reps(make_spec(Family::Q, 0.0, 1.0)); }

RepSet rep_sedenion() { return doubled_unit_reps(make_spec(Family::O, 0.0, 1.0)); }

RepReport verify_rep(const RepSet& reps, const AlgebraSpec& target, std::size_t trials,
                     std::uint64_t seed, double tol) {
  const AlgebraSpec& coeff = reps.coeff_spec;
  const bool scalar_entries = coeff.dim() == 1;
  const std::size_t expected_dim = scalar_entries ? 4 : 2 * coeff.dim();
  if (target.dim() != expected_dim || reps.mats.size() != target.dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "representation does not match the target algebra's dimension");
  }
  if (scalar_entries && !reps.embedding) {
    throw AlgebraError(ErrorCode::InvalidArgument,
                       "complex-entry representation lacks its embedding of C(p,q)");
  }

  RepReport report;
  report.seed = seed;
  const std::size_t dim = target.dim();
  report.untrusted = scalar_entries && std::abs(target.sqrt_neg_d()) <= tol;

  // (a) row action against right multiplication by each unit.
  if (!report.untrusted) {
    for (std::size_t t = 0; t < trials; ++t) {
      SplitMix64 rng = substream(seed, t);
      const Element x = random_element(rng, dim);
      for (std::size_t m = 0; m < dim; ++m) {
        const Element unit = Element::unit(dim, m);
        double r = 0.0;
        if (scalar_entries) {
          const Complex lambda = *reps.embedding;
          const auto to_row = [&](const Element& units) {
            const PairView pair = units_to_pair(target, units, tol);
            return PairView(Element{embed(pair.first, lambda)}, Element{embed(pair.second, lambda)});
          };
          const PairView lhs = act_row(to_row(x), reps.mats[m], coeff);
          const PairView rhs = to_row(multiply(target, x, unit));
          r = relative_residual(join(lhs), join(rhs));
        } else {
          const PairView pair = split(x);
          const PairView lhs = act_row(pair, reps.mats[m], coeff);
          const PairView rhs = cd_product(target, pair, split(unit));
          r = relative_residual(join(lhs), join(rhs));
        }
        ++report.action_checks;
        report.max_action_residual = std::max(report.max_action_residual, r);
        if (r > tol) ++report.action_failures;
      }
    }
  }

  // (b) R(e_a) R(e_b) against R(e_a e_b).
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const Element ea = Element::unit(dim, a);
      const Element eb = Element::unit(dim, b);
      const Element product = scalar_entries ? multiply(target, ea, eb)
                                             : join(cd_product(target, split(ea), split(eb)));
      const double r = relative_residual(mat_mul_nonstandard(reps.mats[a], reps.mats[b], coeff),
                                         represent(reps, product));
      ++report.product_checks;
      report.max_product_residual = std::max(report.max_product_residual, r);
      if (r > tol) ++report.product_failures;
    }
  }
  return report;
}

}  // namespace cayley
