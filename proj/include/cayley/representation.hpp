#pragma once

// 2×2 matrix representations whose entries live in a (possibly
// noncommutative, nonassociative) coefficient algebra.
//
// A pair (a1, a2) is acted on from the right by M as
//   (a1 m11 + m21 a2,  m12 a1 + a2 m22),
// and matrices compose with the nonstandard product
//   c11 = a11 b11 + b21 a12    c12 = b12 a11 + a12 b22
//   c21 = b11 a21 + a22 b21    c22 = a21 b12 + b22 a22.
// For commuting entries both reduce to the ordinary row-vector/matrix rules.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/algebra.hpp"

namespace cayley {

class Mat2 {
 public:
  Mat2(Element m11, Element m12, Element m21, Element m22);

  static Mat2 identity(std::size_t coeff_dim);
  static Mat2 zero(std::size_t coeff_dim);
  /// Complex-scalar matrix (coefficient dim 1).
  static Mat2 scalar(Complex m11, Complex m12, Complex m21, Complex m22);

  std::size_t coeff_dim() const noexcept { return entries_[0][0].dim(); }
  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }

  Mat2& operator+=(const Mat2& other);
  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator*(Complex s, Mat2 m);

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  std::array<std::array<Element, 2>, 2> entries_;
};

/// Largest relative_residual over the four entries.
double relative_residual(const Mat2& a, const Mat2& b);

Mat2 mat_mul_nonstandard(const Mat2& a, const Mat2& b, const AlgebraSpec& coeff_spec);

/// Textbook product c_rc = Σ_k a_rk b_kc, factors kept in that order.
Mat2 mat_mul_standard(const Mat2& a, const Mat2& b, const AlgebraSpec& coeff_spec);

PairView act_row(const PairView& pair, const Mat2& m, const AlgebraSpec& coeff_spec);

struct RepSet {
  AlgebraSpec coeff_spec;
  std::vector<Mat2> mats;  // mats[m] represents e_m
  std::vector<std::string> labels;
  /// For complex-entry representations of Q(p,q): the image of the unit e_1
  /// of the half algebra C(p,q) in ℂ, used to map pair coordinates to
  /// row vectors.
  std::optional<Complex> embedding;
};

/// Σ x_m R(e_m).
Mat2 represent(const RepSet& reps, const Element& x);

/// Complex 2×2 representation of Q(p,q) for the spec's branch:
///   u1 = (-p/2 ± √D, 0; ∓p√D, -p/2 ∓ √D),  u2 = (0, 1; -q, -p),
///   u3 = ((-1 ∓ i)p/2, ∓i; ±i(p²/2 - q), (-1 ± i)p/2).
RepSet rep_quadratic_quaternion(const AlgebraSpec& quaternion_spec);
RepSet rep_quadratic_quaternion(Complex p, Complex q, Branch branch = Branch::Upper);

/// O(0,1) over Hamilton's quaternions.
RepSet rep_octonion();

/// S(0,1) over Cayley's octonions.
RepSet rep_sedenion();

struct RepReport {
  std::size_t action_checks = 0;
  std::size_t action_failures = 0;
  double max_action_residual = 0.0;
  std::size_t product_checks = 0;
  std::size_t product_failures = 0;
  double max_product_residual = 0.0;
  bool untrusted = false;  // √(-D) ≈ 0: pair coordinates are not recoverable
  std::uint64_t seed = 0;

  bool passed() const noexcept {
    return !untrusted && action_failures == 0 && product_failures == 0;
  }
};

/// (a) the row action of every unit matrix against right multiplication by
/// that unit, on `trials` random elements; (b) the nonstandard product of
/// every pair of unit matrices against the representation of the product.
RepReport verify_rep(const RepSet& reps, const AlgebraSpec& target, std::size_t trials,
                     std::uint64_t seed, double tol = kDefaultTolerance);

}  // namespace cayley
