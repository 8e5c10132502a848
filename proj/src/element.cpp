#include "cayley/element.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cayley/errors.hpp"

namespace cayley {
namespace {

void check_dim(std::size_t dim) {
  if (!is_valid_dim(dim)) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "element dimension must be 1, 2, 4, 8 or 16, got " + std::to_string(dim));
  }
}

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Element::Element(std::size_t dim) : coeffs_(dim) { check_dim(dim); }

Element::Element(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  check_dim(coeffs_.size());
}

Element::Element(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  check_dim(coeffs_.size());
}

Element Element::unit(std::size_t dim, std::size_t index) {
  Element e(dim);
  if (index >= dim) {
    throw AlgebraError(ErrorCode::IndexOutOfRange,
                       "unit index " + std::to_string(index) + " out of range for dim " +
                           std::to_string(dim));
  }
  e.coeffs_[index] = 1.0;
  return e;
}

Element Element::scalar(std::size_t dim, Complex value) {
  Element e(dim);
  e.coeffs_[0] = value;
  return e;
}

double Element::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Element::is_finite() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

Element& Element::operator+=(const Element& other) {
  check_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Element& Element::operator*=(Complex s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

double relative_residual(const Element& a, const Element& b) {
  check_same_dim(a.dim(), b.dim());
  double diff = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  return diff / std::max({1.0, a.max_abs(), b.max_abs()});
}

double relative_residual(Complex a, Complex b) noexcept {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

PairView::PairView(Element a1, Element a2) : first(std::move(a1)), second(std::move(a2)) {
  check_same_dim(first.dim(), second.dim());
}

PairView split(const Element& x) {
  if (x.dim() < 2) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "cannot split a dim-1 element into a pair");
  }
  const std::size_t h = x.dim() / 2;
  auto c = x.coeffs();
  return PairView(Element(std::vector<Complex>(c.begin(), c.begin() + h)),
                  Element(std::vector<Complex>(c.begin() + h, c.end())));
}

Element join(const PairView& pair) {
  std::vector<Complex> c(pair.first.coeffs().begin(), pair.first.coeffs().end());
  c.insert(c.end(), pair.second.coeffs().begin(), pair.second.coeffs().end());
  return Element(std::move(c));
}

}  // namespace cayley
