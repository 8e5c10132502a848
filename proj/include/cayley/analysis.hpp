#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cayley/algebra.hpp"

namespace cayley {

/// x_0 e_0 + Σ x_i ē_i with ē_i = -p e_0 - e_i. Dim 16 uses the pair form.
Element conjugate(const AlgebraSpec& spec, const Element& x);

/// Pair-form involution  b̄ = ā1 - (p/2)(a2 + ā2) - a2 ẽ  of the parent algebra.
PairView conjugate_pair(const AlgebraSpec& parent, const PairView& b);

/// Symmetric coefficient matrix of the quadratic norm, N(X) = Σ C_ij x_i x_j.
struct NormForm {
  std::size_t dim = 0;
  std::vector<Complex> c;  // row-major dim×dim

  Complex operator()(std::size_t i, std::size_t j) const { return c[i * dim + j]; }
};

/// C_00 = 1, C_ii = q, C_0i = -p/2, C_ij = p²/4 (i ≠ j ≥ 1).
NormForm norm_form(Complex p, Complex q, std::size_t dim);

/// The NormForm of `spec`. Dims 1..8 use the closed form above; dim 16 is the
/// polarization of the e_0 part of X X̄ in the pair basis.
NormForm norm_form(const AlgebraSpec& spec);

Complex norm(const AlgebraSpec& spec, const Element& x);

/// X̄ / N(X). Throws DegenerateNorm when |N(X)| <= tol.
Element inverse(const AlgebraSpec& spec, const Element& x, double tol = kDefaultTolerance);

enum class Side { Left, Right };

/// Left: X with B X = A, i.e. B̄ A / N(B). Right: Y with Y B = A, i.e. A B̄ / N(B).
Element solve(const AlgebraSpec& spec, const Element& b, const Element& a, Side side,
              double tol = kDefaultTolerance);

struct Bracket {
  Element commutator;
  Element anticommutator;
};

/// Closed forms for imaginary units i, j >= 1:
///   [e_i, e_j] = 2 ε_ijk √(-D) ((p/2) e_0 + e_k)
///   {e_i, e_j} = 2 ((δ_ij D - p²/4) e_0 - (p/2)(e_i + e_j))
Bracket bracket(const AlgebraSpec& spec, std::size_t i, std::size_t j);

/// (XY)Z - X(YZ)
Element associator_direct(const AlgebraSpec& spec, const Element& x, const Element& y,
                          const Element& z);

/// Closed-form associator of imaginary units in dims 4 and 8 (zero for
/// quaternions, and whenever D = 0).
Element associator_formula(const AlgebraSpec& spec, std::size_t i, std::size_t j, std::size_t k);

enum class Kind { Division, Split, NilDegenerate };

std::string_view to_string(Kind kind) noexcept;

struct Classification {
  Kind kind = Kind::Split;
  std::vector<Complex> minors;  // leading principal minors of C, sizes 1..dim
};

/// Hurwitz-criterion classification of the (p, q) family. Parameters count
/// as real when |im| < 1e-9 (1 + |re|).
Classification classify(Complex p, Complex q, std::size_t dim = 8,
                        double tol = kDefaultTolerance);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a real norm form. Throws ComplexParameters for complex entries.
Signature signature(const NormForm& form, double tol = kDefaultTolerance);

/// Norm-form equivalence over the reals (Sylvester: same signature).
bool norms_equivalent(const AlgebraSpec& a, const AlgebraSpec& b,
                      double tol = kDefaultTolerance);

enum class Identity {
  Commutativity,
  Associativity,
  LeftAlternative,
  RightAlternative,
  Flexible,
  NormComposition,
};

std::string_view to_string(Identity identity) noexcept;
std::optional<Identity> parse_identity(std::string_view text) noexcept;

/// Number of random elements the identity consumes (2 or 3).
std::size_t arity(Identity identity) noexcept;

/// Relative residual of the identity evaluated on (x, y, z); z is ignored by
/// two-argument identities.
double identity_residual(const AlgebraSpec& spec, Identity identity, const Element& x,
                         const Element& y, const Element& z);

struct Counterexample {
  std::size_t trial = 0;
  double residual = 0.0;
  Element x, y;
  std::optional<Element> z;
};

struct IdentityReport {
  Identity identity = Identity::Associativity;
  std::size_t trials = 0;
  double max_residual = 0.0;
  std::optional<Counterexample> counterexample;  // lowest failing trial index
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;

  bool holds() const noexcept { return !counterexample.has_value(); }
};

/// Seeded random sweep. Trial t draws its elements from a stream derived from
/// (seed, t) alone, so the report does not depend on `workers`.
IdentityReport check_identity(const AlgebraSpec& spec, Identity identity, std::size_t trials,
                              std::uint64_t seed, double tol = kDefaultTolerance,
                              unsigned workers = 1);

}  // namespace cayley
