#include "cayley/algebra.hpp"

#include <array>
#include <cmath>
#include <string>

#include "cayley/analysis.hpp"
#include "cayley/errors.hpp"

namespace cayley {
namespace {

using Triple = std::array<std::size_t, 3>;

constexpr std::array<Triple, 7> kOctonionTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

Family half_family(Family family) noexcept {
  switch (family) {
    case Family::C: return Family::Scalar;
    case Family::Q: return Family::C;
    case Family::O: return Family::Q;
    case Family::S: return Family::O;
    case Family::Scalar: break;
  }
  return Family::Scalar;
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_dim(const AlgebraSpec& spec, const Element& x) {
  if (x.dim() != spec.dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "element has dim " + std::to_string(x.dim()) + ", algebra " +
                           std::string(to_string(spec.family())) + " has dim " +
                           std::to_string(spec.dim()));
  }
}

// Eqs. (2)-(3) evaluated directly; valid for dims 1..8.
Element formula_product(std::size_t dim, Complex p, Complex q, Complex sqrt_neg_d,
                        std::size_t i, std::size_t j) {
  if (i == 0) return Element::unit(dim, j);
  if (j == 0) return Element::unit(dim, i);
  Element out(dim);
  if (i == j) {
    out[0] = -q;
    out[i] = -p;
    return out;
  }
  const Complex half_p = p / 2.0;
  out[0] = -half_p * half_p;
  out[i] -= half_p;
  out[j] -= half_p;
  for (std::size_t k = 1; k < dim; ++k) {
    if (const int eps = levi_civita(dim, i, j, k); eps != 0) {
      out[0] += double(eps) * half_p * sqrt_neg_d;
      out[k] += double(eps) * sqrt_neg_d;
      break;
    }
  }
  return out;
}

Element commutator(const AlgebraSpec& spec, const Element& a, const Element& b) {
  return multiply(spec, a, b) - multiply(spec, b, a);
}

}  // namespace

std::size_t dimension_of(Family family) noexcept {
  switch (family) {
    case Family::Scalar: return 1;
    case Family::C: return 2;
    case Family::Q: return 4;
    case Family::O: return 8;
    case Family::S: return 16;
  }
  return 0;
}

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Scalar: return "Scalar";
    case Family::C: return "C";
    case Family::Q: return "Q";
    case Family::O: return "O";
    case Family::S: return "S";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) noexcept {
  if (text == "C") return Family::C;
  if (text == "Q") return Family::Q;
  if (text == "O") return Family::O;
  if (text == "S") return Family::S;
  if (text == "Scalar") return Family::Scalar;
  return std::nullopt;
}

std::string_view to_string(Branch branch) noexcept {
  return branch == Branch::Upper ? "upper" : "lower";
}

std::optional<Branch> parse_branch(std::string_view text) noexcept {
  if (text == "upper") return Branch::Upper;
  if (text == "lower") return Branch::Lower;
  return std::nullopt;
}

int levi_civita(std::size_t dim, std::size_t i, std::size_t j, std::size_t k) noexcept {
  if (dim != 4 && dim != 8) return 0;
  const std::size_t count = dim == 8 ? kOctonionTriples.size() : 1;
  for (std::size_t t = 0; t < count; ++t) {
    const auto& c = kOctonionTriples[t];
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t a = c[r], b = c[(r + 1) % 3], d = c[(r + 2) % 3];
      if (i == a && j == b && k == d) return 1;
      if (i == b && j == a && k == d) return -1;
    }
  }
  return 0;
}

StructureTable::StructureTable(std::size_t dim, std::vector<Complex> data)
    : dim_(dim), data_(std::move(data)) {
  if (data_.size() != dim * dim * dim) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "structure table size does not match dim");
  }
}

Element StructureTable::entry(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) {
    throw AlgebraError(ErrorCode::IndexOutOfRange, "structure table index out of range");
  }
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Element(std::vector<Complex>(begin, begin + static_cast<std::ptrdiff_t>(dim_)));
}

AlgebraSpec make_spec(Family family, Complex p, Complex q, Branch branch) {
  return make_spec_with_root(family, p, q, std::sqrt(q - p * p / 4.0), branch);
}

AlgebraSpec make_spec_with_root(Family family, Complex p, Complex q, Complex sqrt_neg_d,
                                Branch branch) {
  if (!is_finite(p) || !is_finite(q) || !is_finite(sqrt_neg_d)) {
    throw AlgebraError(ErrorCode::InvalidArgument, "algebra parameters must be finite");
  }
  AlgebraSpec spec;
  spec.family_ = family;
  spec.p_ = p;
  spec.q_ = q;
  spec.d_ = p * p / 4.0 - q;
  if (relative_residual(sqrt_neg_d * sqrt_neg_d, -spec.d_) > 1e-9) {
    throw AlgebraError(ErrorCode::InvalidArgument, "supplied root does not square to -D");
  }
  spec.sqrt_neg_d_ = sqrt_neg_d;
  spec.sqrt_d_ = Complex(0.0, -1.0) * sqrt_neg_d;
  spec.branch_ = branch;
  if (family != Family::Scalar) {
    spec.half_ = std::make_shared<const AlgebraSpec>(
        make_spec_with_root(half_family(family), p, q, sqrt_neg_d, branch));
  }

  const std::size_t dim = spec.dim();
  std::vector<Complex> data(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // Dim 16 has no closed-form table; generate it from the doubling.
      const Element e =
          family == Family::S
              ? join(cd_product(spec, split(Element::unit(dim, i)), split(Element::unit(dim, j))))
              : formula_product(dim, p, q, sqrt_neg_d, i, j);
      for (std::size_t k = 0; k < dim; ++k) data[(i * dim + j) * dim + k] = e[k];
    }
  }
  spec.table_ = StructureTable(dim, std::move(data));
  return spec;
}

Element basis_product(const AlgebraSpec& spec, std::size_t i, std::size_t j) {
  const std::size_t dim = spec.dim();
  if (i >= dim || j >= dim) {
    throw AlgebraError(ErrorCode::IndexOutOfRange,
                       "unit index out of range for dim " + std::to_string(dim));
  }
  if (spec.family() == Family::S) return spec.table().entry(i, j);
  return formula_product(dim, spec.p(), spec.q(), spec.sqrt_neg_d(), i, j);
}

Element multiply(const AlgebraSpec& spec, const Element& x, const Element& y) {
  require_dim(spec, x);
  require_dim(spec, y);
  if (spec.family() == Family::S) {
    return join(cd_product(spec, split(x), split(y)));
  }
  const std::size_t dim = spec.dim();
  const StructureTable& table = spec.table();
  Element out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == Complex{}) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex xy = x[i] * y[j];
      if (xy == Complex{}) continue;
      for (std::size_t k = 0; k < dim; ++k) out[k] += xy * table.coefficient(i, j, k);
    }
  }
  return out;
}

PairView cd_product(const AlgebraSpec& parent, const PairView& a, const PairView& b) {
  const AlgebraSpec* half = parent.half();
  if (half == nullptr) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "the ground field has no pair form");
  }
  if (a.half_dim() != half->dim() || b.half_dim() != half->dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "pair halves must have dim " + std::to_string(half->dim()));
  }
  const Complex p = parent.p();
  const Complex q = parent.q();
  const Complex half_p = p / 2.0;
  const Element& a1 = a.first;
  const Element& a2 = a.second;
  const Element& a3 = b.first;
  const Element& a4 = b.second;
  const Element a3_bar = conjugate(*half, a3);
  const Element a4_bar = conjugate(*half, a4);

  Element first = multiply(*half, a1, a3);
  first -= half_p * commutator(*half, a1, a4);
  first -= half_p * multiply(*half, a2, a3 - a3_bar);
  first -= q * multiply(*half, a4_bar, a2);
  first += (p * p / 2.0) * commutator(*half, a2, a4);

  Element second = multiply(*half, a4, a1);
  second += multiply(*half, a2, a3_bar);
  second -= half_p * (multiply(*half, a2, a4_bar) + multiply(*half, a4, a2));

  return PairView(std::move(first), std::move(second));
}

Element pair_to_units(const AlgebraSpec& spec, const PairView& pair, bool require_invertible,
                      double tol) {
  const std::size_t dim = spec.dim();
  if (dim < 2 || pair.half_dim() * 2 != dim) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "pair of dim-" + std::to_string(pair.half_dim()) +
                           " halves does not match algebra dim " + std::to_string(dim));
  }
  if (dim == 16 && spec.p() != Complex{}) {
    throw AlgebraError(ErrorCode::UnsupportedTransform,
                       "dim-16 unit transform is only defined for p = 0");
  }
  const Complex s = spec.sqrt_neg_d();
  if (require_invertible && std::abs(s) <= tol) {
    throw AlgebraError(ErrorCode::SingularParameter, "sqrt(-D) vanishes; transform not invertible");
  }
  Element a = join(pair);
  if (dim == 2 || dim == 16) return a;

  const std::size_t h = dim / 2;
  const Complex half_p = spec.p() / 2.0;
  Complex upper_sum{};
  for (std::size_t m = 1; m < h; ++m) upper_sum += a[h + m];

  Element out(dim);
  out[0] = a[0] + half_p * (s - half_p) * upper_sum;
  for (std::size_t m = 1; m < h; ++m) {
    out[m] = a[m] - half_p * a[h + m];
    out[h + m] = s * a[h + m];
  }
  out[h] = a[h] - half_p * upper_sum;
  return out;
}

PairView units_to_pair(const AlgebraSpec& spec, const Element& x, double tol) {
  require_dim(spec, x);
  const std::size_t dim = spec.dim();
  if (dim < 2) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "the ground field has no pair form");
  }
  if (dim == 16 && spec.p() != Complex{}) {
    throw AlgebraError(ErrorCode::UnsupportedTransform,
                       "dim-16 unit transform is only defined for p = 0");
  }
  if (dim == 2 || dim == 16) return split(x);

  const Complex s = spec.sqrt_neg_d();
  if (std::abs(s) <= tol) {
    throw AlgebraError(ErrorCode::SingularParameter, "sqrt(-D) vanishes; transform not invertible");
  }
  const std::size_t h = dim / 2;
  const Complex half_p = spec.p() / 2.0;
  Element a(dim);
  Complex upper_sum{};
  for (std::size_t m = 1; m < h; ++m) {
    a[h + m] = x[h + m] / s;
    upper_sum += a[h + m];
  }
  for (std::size_t m = 1; m < h; ++m) a[m] = x[m] + half_p * a[h + m];
  a[h] = x[h] + half_p * upper_sum;
  a[0] = x[0] - half_p * (s - half_p) * upper_sum;
  return split(a);
}

}  // namespace cayley
