#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cayley {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// True for the dimensions an algebra element may have: 1, 2, 4, 8, 16.
constexpr bool is_valid_dim(std::size_t dim) noexcept {
  return dim == 1 || dim == 2 || dim == 4 || dim == 8 || dim == 16;
}

/// Coefficient vector of an algebra element in the unit basis e_0..e_{d-1}.
class Element {
 public:
  Element() : Element(1) {}
  explicit Element(std::size_t dim);
  explicit Element(std::vector<Complex> coeffs);
  Element(std::initializer_list<Complex> coeffs);

  static Element unit(std::size_t dim, std::size_t index);
  static Element scalar(std::size_t dim, Complex value);

  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  Complex& operator[](std::size_t i) { return coeffs_[i]; }

  /// Largest |x_i|.
  double max_abs() const noexcept;
  bool is_finite() const noexcept;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex s) noexcept;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Complex(-1.0); }
  friend Element operator*(Complex s, Element a) { return a *= s; }
  friend Element operator*(Element a, Complex s) { return a *= s; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// ||a - b||_inf / max(1, ||a||_inf, ||b||_inf). Dimensions must agree.
double relative_residual(const Element& a, const Element& b);

/// |a - b| / max(1, |a|, |b|).
double relative_residual(Complex a, Complex b) noexcept;

inline bool approx_equal(const Element& a, const Element& b,
                         double tol = kDefaultTolerance) {
  return relative_residual(a, b) <= tol;
}

/// An element of a 2n-dimensional algebra written as the ordered pair
/// (a_1, a_2) = a_1 + a_2 ẽ of n-dimensional elements.
struct PairView {
  Element first;
  Element second;

  PairView(Element a1, Element a2);

  std::size_t half_dim() const noexcept { return first.dim(); }

  friend bool operator==(const PairView&, const PairView&) = default;
};

/// Coordinates 0..n-1 become `first`, n..2n-1 become `second`.
PairView split(const Element& x);
Element join(const PairView& pair);

}  // namespace cayley
