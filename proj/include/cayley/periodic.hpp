#pragma once

// Periodic algebras C(-2ρ^k cos(πk/2), ρ^{2k}) and Q(...) for ρ ∈ {1, i}:
// the continuous power law of e_1, the orthogonal forms, and the 2×2
// representations that give the dual Hamilton/Pauli description.

#include <optional>
#include <string_view>

#include "cayley/algebra.hpp"
#include "cayley/representation.hpp"

namespace cayley {

/// |k mod 2| below this raises PoleAtEvenK wherever csc/cot of πk/2 appear.
inline constexpr double kPoleTolerance = 1e-6;

enum class Rho { One, I };

std::string_view to_string(Rho rho) noexcept;
std::optional<Rho> parse_rho(std::string_view text) noexcept;

bool near_even(double k, double tol = kPoleTolerance) noexcept;

/// cos(πx/2) and sin(πx/2) with exact values at integer x.
double cos_half_pi(double x) noexcept;
double sin_half_pi(double x) noexcept;

/// Principal i^t = e^{iπt/2}.
Complex i_pow(double t) noexcept;

/// ρ^t with the principal logarithm.
Complex rho_pow(Rho rho, double t) noexcept;

/// p = -2ρ^k cos(πk/2), q = ρ^{2k}. √(-D) is fixed to sin(πk/2) for ρ = 1 and
/// -i^k sin(πk/2) for ρ = i, the roots under which the lower-branch quadratic
/// representation coincides with `periodic_rep`.
AlgebraSpec periodic_spec(Rho rho, double k, Family family = Family::C,
                          Branch branch = Branch::Upper);

struct PowerLaw {
  Complex a;  // e_0 part
  Complex b;  // ω part
};

/// ω^θ = a + ω b for ω = i^k:
///   a = cos(πkθ/2) - cot(πk/2) sin(πkθ/2),  b = csc(πk/2) sin(πkθ/2).
PowerLaw power_law(double k, double theta);

/// e_1^θ = ρ^{kθ} (a e_0 + ρ^{-k} b e_1) in periodic_spec(rho, k).
Element unit_power(Rho rho, double k, double theta);

enum class OrthogonalForm {
  PlusOne,   // Q(0, 1):  e_0 cos(πθ/2) + e_n sin(πθ/2)
  MinusOne,  // Q(0,-1):  (cos + i sin)(πθ/2) · (e_0 cos(πθ/2) - i e_n sin(πθ/2))
};

Element orthogonal_unit_power(std::size_t n, double theta, OrthogonalForm form);

/// Lower-branch representation matrices (u)_0..(u)_3 of Q(periodic p, q).
RepSet periodic_rep(Rho rho, double k);

/// The (e)_0..(e)_3 matrices obtained by the substitution k = θ = τ.
RepSet substituted_units(Rho rho, double tau);

enum class UnitSystem { Hamilton, Pauli };

struct DerivedUnits {
  RepSet primary;      // Hamilton: (e_(1))_n;   Pauli: (e_(i))_n
  RepSet alternative;  // Hamilton: -i (e_(i))_n; Pauli: +i (e_(1))_n
};

DerivedUnits derived_units(UnitSystem system, double tau);

/// Largest residual of e_n² = -I and e_1 e_2 e_3 = -I (complex matrix product).
double hamilton_residual(const RepSet& units);

/// Largest residual of σ_x σ_y - σ_y σ_x = 2i σ_z and σ_x σ_y + σ_y σ_x = 0
/// over cyclic (x, y, z).
double pauli_residual(const RepSet& units);

}  // namespace cayley
