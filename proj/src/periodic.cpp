#include "cayley/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_off_pole(double k, const char* what) {
  if (near_even(k)) {
    throw AlgebraError(ErrorCode::PoleAtEvenK,
                       std::string(what) + " = " + std::to_string(k) + " lies on a pole (even)");
  }
}

// Quadrant n of x/1 in [0, 4) and the remainder f in [-1/2, 1/2].
std::pair<int, double> reduce(double x) noexcept {
  double r = std::fmod(x, 4.0);
  if (r < 0.0) r += 4.0;
  const double n = std::nearbyint(r);
  return {static_cast<int>(n) % 4, r - n};
}

Mat2 matmul(const Mat2& a, const Mat2& b) {
  static const AlgebraSpec field = make_spec(Family::Scalar, 0.0, 1.0);
  return mat_mul_standard(a, b, field);
}

RepSet scaled(RepSet units, Complex factor) {
  for (std::size_t n = 1; n < units.mats.size(); ++n) units.mats[n] = factor * units.mats[n];
  return units;
}

RepSet scalar_repset(std::vector<Mat2> mats, const char* prefix, std::optional<Complex> embedding) {
  std::vector<std::string> labels;
  for (std::size_t n = 0; n < mats.size(); ++n) labels.push_back(prefix + std::to_string(n));
  return RepSet{make_spec(Family::Scalar, 0.0, 1.0), std::move(mats), std::move(labels), embedding};
}

}  // namespace

std::string_view to_string(Rho rho) noexcept { return rho == Rho::One ? "1" : "i"; }

std::optional<Rho> parse_rho(std::string_view text) noexcept {
  if (text == "1") return Rho::One;
  if (text == "i") return Rho::I;
  return std::nullopt;
}

bool near_even(double k, double tol) noexcept {
  return std::abs(k - 2.0 * std::nearbyint(k / 2.0)) < tol;
}

double cos_half_pi(double x) noexcept {
  const auto [n, f] = reduce(x);
  const double a = std::numbers::pi * f / 2.0;
  switch (n) {
    case 0: return std::cos(a);
    case 1: return -std::sin(a);
    case 2: return -std::cos(a);
    default: return std::sin(a);
  }
}

double sin_half_pi(double x) noexcept {
  const auto [n, f] = reduce(x);
  const double a = std::numbers::pi * f / 2.0;
  switch (n) {
    case 0: return std::sin(a);
    case 1: return std::cos(a);
    case 2: return -std::sin(a);
    default: return -std::cos(a);
  }
}

Complex i_pow(double t) noexcept { return {cos_half_pi(t), sin_half_pi(t)}; }

Complex rho_pow(Rho rho, double t) noexcept { return rho == Rho::One ? Complex(1.0) : i_pow(t); }

AlgebraSpec periodic_spec(Rho rho, double k, Family family, Branch branch) {
  const Complex rho_k = rho_pow(rho, k);
  const Complex p = -2.0 * rho_k * cos_half_pi(k);
  const Complex q = rho_pow(rho, 2.0 * k);
  const double s = sin_half_pi(k);
  const Complex root = rho == Rho::One ? Complex(s) : -rho_k * s;
  return make_spec_with_root(family, p, q, root, branch);
}

PowerLaw power_law(double k, double theta) {
  require_off_pole(k, "k");
  const double c = cos_half_pi(k * theta);
  const double s = sin_half_pi(k * theta);
  const double cot = cos_half_pi(k) / sin_half_pi(k);
  const double csc = 1.0 / sin_half_pi(k);
  return {c - cot * s, csc * s};
}

Element unit_power(Rho rho, double k, double theta) {
  const PowerLaw law = power_law(k, theta);
  const Complex scale = rho_pow(rho, k * theta);
  return Element{scale * law.a, scale * rho_pow(rho, -k) * law.b};
}

Element orthogonal_unit_power(std::size_t n, double theta, OrthogonalForm form) {
  if (n < 1 || n > 3) {
    throw AlgebraError(ErrorCode::IndexOutOfRange, "orthogonal form unit index must be 1, 2 or 3");
  }
  const double c = cos_half_pi(theta);
  const double s = sin_half_pi(theta);
  Element out(4);
  if (form == OrthogonalForm::PlusOne) {
    out[0] = c;
    out[n] = s;
  } else {
    const Complex phase(c, s);
    out[0] = phase * c;
    out[n] = phase * (-kI * s);
  }
  return out;
}

RepSet periodic_rep(Rho rho, double k) {
  std::vector<Mat2> mats{Mat2::identity(1)};
  if (rho == Rho::One) {
    const double c = cos_half_pi(k);
    const double s = sin_half_pi(k);
    const Complex lambda(c, s);
    mats.push_back(Mat2::scalar(lambda, 0.0, 2.0 * kI * c * s, Complex(c, -s)));
    mats.push_back(Mat2::scalar(0.0, 1.0, -1.0, 2.0 * c));
    mats.push_back(Mat2::scalar((1.0 - kI) * c, kI, -kI * (c * c - s * s), (1.0 + kI) * c));
    return scalar_repset(std::move(mats), "u", lambda);
  }
  const Complex w = i_pow(2.0 * k);
  const Complex v = i_pow(2.0 * k - 1.0);
  mats.push_back(Mat2::scalar(1.0, 0.0, v * sin_half_pi(2.0 * k), w));
  mats.push_back(Mat2::scalar(0.0, 1.0, -w, 1.0 + w));
  mats.push_back(Mat2::scalar(0.5 * (1.0 - kI) * (1.0 + w), kI, v * cos_half_pi(2.0 * k),
                              0.5 * (1.0 + kI) * (1.0 + w)));
  return scalar_repset(std::move(mats), "u", Complex(1.0));
}

RepSet substituted_units(Rho rho, double tau) {
  require_off_pole(tau, "tau");
  const double c = cos_half_pi(tau);
  const double s = sin_half_pi(tau);
  const double cot = c / s;
  const double csc = 1.0 / s;
  std::vector<Mat2> mats{Mat2::identity(1)};
  if (rho == Rho::One) {
    mats.push_back(Mat2::scalar(kI, 0.0, 2.0 * kI * c, -kI));
    mats.push_back(Mat2::scalar(-cot, csc, -csc, cot));
    mats.push_back(Mat2::scalar(-kI * cot, kI * csc, -kI * csc + 2.0 * kI * s, kI * cot));
  } else {
    mats.push_back(Mat2::scalar(1.0, 0.0, 2.0 * i_pow(tau) * c, -1.0));
    mats.push_back(Mat2::scalar(-kI * cot, 1.0 + kI * cot, 1.0 - kI * cot, kI * cot));
    mats.push_back(Mat2::scalar(-cot, -kI + cot, (-1.0 + 2.0 * s * s) * (kI + cot), cot));
  }
  return scalar_repset(std::move(mats), "e", std::nullopt);
}

DerivedUnits derived_units(UnitSystem system, double tau) {
  if (system == UnitSystem::Hamilton) {
    return {substituted_units(Rho::One, tau), scaled(substituted_units(Rho::I, tau), -kI)};
  }
  return {substituted_units(Rho::I, tau), scaled(substituted_units(Rho::One, tau), kI)};
}

double hamilton_residual(const RepSet& units) {
  const Mat2 minus_identity = Complex(-1.0) * Mat2::identity(1);
  const auto& e = units.mats;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 3; ++n) {
    worst = std::max(worst, relative_residual(matmul(e[n], e[n]), minus_identity));
  }
  return std::max(worst, relative_residual(matmul(matmul(e[1], e[2]), e[3]), minus_identity));
}

double pauli_residual(const RepSet& units) {
  const auto& s = units.mats;
  double worst = 0.0;
  for (const auto [x, y, z] : {std::array<std::size_t, 3>{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}) {
    const Mat2 xy = matmul(s[x], s[y]);
    const Mat2 yx = matmul(s[y], s[x]);
    worst = std::max(worst, relative_residual(xy + Complex(-1.0) * yx, Complex(0.0, 2.0) * s[z]));
    worst = std::max(worst, relative_residual(xy + yx, Mat2::zero(1)));
  }
  return worst;
}

}  // namespace cayley
