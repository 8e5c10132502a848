#pragma once

// Parameterized hypercomplex algebras C(p,q), Q(p,q), O(p,q) and the
// dimension-16 doubling S(p,q) of O(p,q).
//
// Units obey e_0 e_i = e_i e_0 = e_i and e_i^2 = -q e_0 - p e_i. For the
// quaternion and octonion families distinct imaginary units multiply as
//
//   e_i e_j = (δ_ij D + ε_ijk (p/2) √(-D) - p²/4) e_0
//             - (p/2) e_i - (p/2) e_j + ε_ijk √(-D) e_k,     D = p²/4 - q,
//
// with ε_ijk = +1 on the cyclic triples 123, 145, 176, 246, 257, 347, 365
// (only 123 for quaternions). Each algebra of dimension 2n is also the
// doubling of its n-dimensional half algebra with the same (p, q); that
// doubling product is `cd_product`.

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "cayley/element.hpp"

namespace cayley {

enum class Family {
  Scalar,  // the ground field itself, dim 1
  C,
  Q,
  O,
  S,
};

enum class Branch { Upper, Lower };

constexpr int sign_of(Branch b) noexcept { return b == Branch::Upper ? 1 : -1; }

std::size_t dimension_of(Family family) noexcept;
std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view text) noexcept;
std::string_view to_string(Branch branch) noexcept;
std::optional<Branch> parse_branch(std::string_view text) noexcept;

/// Levi-Civita symbol on the imaginary units of a dim-4 or dim-8 algebra.
/// Returns +1 on cyclic rotations of a stored triple, -1 on odd
/// permutations, 0 otherwise (including any index 0 or out of range).
int levi_civita(std::size_t dim, std::size_t i, std::size_t j, std::size_t k) noexcept;

/// Dense dim×dim table of unit products; entry(i, j) = e_i e_j.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(std::size_t dim, std::vector<Complex> data);

  std::size_t dim() const noexcept { return dim_; }
  Complex coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  Element entry(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;  // [(i * dim + j) * dim + k]
};

class AlgebraSpec {
 public:
  Family family() const noexcept { return family_; }
  std::size_t dim() const noexcept { return dimension_of(family_); }
  Complex p() const noexcept { return p_; }
  Complex q() const noexcept { return q_; }
  /// D = p²/4 - q.
  Complex discriminant() const noexcept { return d_; }
  /// √(-D); the principal root unless the spec was built with an explicit one.
  Complex sqrt_neg_d() const noexcept { return sqrt_neg_d_; }
  /// -i·√(-D). Squares to D and pairs with √(-D) the way the quadratic
  /// representation requires.
  Complex sqrt_d() const noexcept { return sqrt_d_; }
  Branch branch() const noexcept { return branch_; }
  const StructureTable& table() const noexcept { return table_; }
  /// Algebra with the same (p, q) and half the dimension; null for Scalar.
  const AlgebraSpec* half() const noexcept { return half_.get(); }

 private:
  friend AlgebraSpec make_spec_with_root(Family, Complex, Complex, Complex, Branch);

  Family family_ = Family::Scalar;
  Complex p_, q_, d_, sqrt_neg_d_, sqrt_d_;
  Branch branch_ = Branch::Upper;
  StructureTable table_;
  std::shared_ptr<const AlgebraSpec> half_;
};

/// Principal √(-D) (branch cut on the negative real axis).
AlgebraSpec make_spec(Family family, Complex p, Complex q, Branch branch = Branch::Upper);

/// Same as make_spec with a caller-chosen root; `sqrt_neg_d`² must equal -D.
AlgebraSpec make_spec_with_root(Family family, Complex p, Complex q, Complex sqrt_neg_d,
                                Branch branch = Branch::Upper);

/// e_i e_j. Formula-driven for dims 1..8, read from the generated table for 16.
Element basis_product(const AlgebraSpec& spec, std::size_t i, std::size_t j);

Element multiply(const AlgebraSpec& spec, const Element& x, const Element& y);

/// Doubling product on pairs of half-dimension elements:
///   (a1, a2)(a3, a4) = (a1 a3 - (p/2)[a1, a4] - (p/2) a2 (a3 - ā3)
///                         - q ā4 a2 + (p²/2)[a2, a4],
///                       a4 a1 + a2 ā3 - (p/2)(a2 ā4 + a4 a2)).
PairView cd_product(const AlgebraSpec& parent, const PairView& a, const PairView& b);

/// Pair coordinates -> unit coordinates. Dims 2 and 16 (p = 0 only) are the
/// identity; dims 4 and 8 apply the √(-D)-scaled change of basis. With
/// `require_invertible`, a vanishing √(-D) raises SingularParameter.
Element pair_to_units(const AlgebraSpec& spec, const PairView& pair,
                      bool require_invertible = false, double tol = kDefaultTolerance);

/// Inverse of pair_to_units.
PairView units_to_pair(const AlgebraSpec& spec, const Element& x,
                       double tol = kDefaultTolerance);

}  // namespace cayley
