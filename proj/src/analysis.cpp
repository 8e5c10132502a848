#include "cayley/analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "cayley/errors.hpp"
#include "cayley/random.hpp"

namespace cayley {
namespace {

void require_dim(const AlgebraSpec& spec, const Element& x) {
  if (x.dim() != spec.dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "element has dim " + std::to_string(x.dim()) + ", expected " +
                           std::to_string(spec.dim()));
  }
}

void require_imaginary_index(const AlgebraSpec& spec, std::size_t i) {
  if (i == 0 || i >= spec.dim()) {
    throw AlgebraError(ErrorCode::IndexOutOfRange,
                       "imaginary unit index " + std::to_string(i) + " outside 1.." +
                           std::to_string(spec.dim() - 1));
  }
}

bool is_real(Complex z) noexcept { return std::abs(z.imag()) < 1e-9 * (1.0 + std::abs(z.real())); }

// Determinant by Gaussian elimination with partial pivoting.
Complex determinant(std::vector<Complex> m, std::size_t n) {
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    }
    if (m[pivot * n + col] == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
      det = -det;
    }
    const Complex d = m[col * n + col];
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = m[r * n + col] / d;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

struct WorkerResult {
  double max_residual = 0.0;
  std::optional<Counterexample> first_failure;
};

WorkerResult run_trials(const AlgebraSpec& spec, Identity identity, std::size_t begin,
                        std::size_t end, std::uint64_t seed, double tol) {
  WorkerResult result;
  const std::size_t dim = spec.dim();
  for (std::size_t t = begin; t < end; ++t) {
    SplitMix64 rng = substream(seed, t);
    Element x = random_element(rng, dim);
    Element y = random_element(rng, dim);
    Element z = arity(identity) == 3 ? random_element(rng, dim) : Element(dim);
    const double r = identity_residual(spec, identity, x, y, z);
    result.max_residual = std::max(result.max_residual, r);
    if (r > tol && !result.first_failure) {
      Counterexample ce{t, r, std::move(x), std::move(y), std::nullopt};
      if (arity(identity) == 3) ce.z = std::move(z);
      result.first_failure = std::move(ce);
    }
  }
  return result;
}

}  // namespace

Element conjugate(const AlgebraSpec& spec, const Element& x) {
  require_dim(spec, x);
  const std::size_t dim = spec.dim();
  if (dim == 1) return x;
  if (dim == 16) return join(conjugate_pair(spec, split(x)));
  Element out(dim);
  out[0] = x[0];
  for (std::size_t i = 1; i < dim; ++i) {
    out[0] -= spec.p() * x[i];
    out[i] = -x[i];
  }
  return out;
}

PairView conjugate_pair(const AlgebraSpec& parent, const PairView& b) {
  const AlgebraSpec* half = parent.half();
  if (half == nullptr || b.half_dim() != half->dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "pair does not match the parent algebra");
  }
  const Element& a1 = b.first;
  const Element& a2 = b.second;
  Element first = conjugate(*half, a1) - (parent.p() / 2.0) * (a2 + conjugate(*half, a2));
  return PairView(std::move(first), -a2);
}

NormForm norm_form(Complex p, Complex q, std::size_t dim) {
  NormForm form{dim, std::vector<Complex>(dim * dim)};
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex c;
      if (i == 0 && j == 0) c = 1.0;
      else if (i == 0 || j == 0) c = -p / 2.0;
      else if (i == j) c = q;
      else c = p * p / 4.0;
      form.c[i * dim + j] = c;
    }
  }
  return form;
}

NormForm norm_form(const AlgebraSpec& spec) {
  const std::size_t dim = spec.dim();
  if (dim != 16) return norm_form(spec.p(), spec.q(), dim);
  NormForm form{dim, std::vector<Complex>(dim * dim)};
  std::vector<Complex> diag(dim);
  for (std::size_t i = 0; i < dim; ++i) diag[i] = norm(spec, Element::unit(dim, i));
  for (std::size_t i = 0; i < dim; ++i) {
    form.c[i * dim + i] = diag[i];
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex both = norm(spec, Element::unit(dim, i) + Element::unit(dim, j));
      const Complex c = 0.5 * (both - diag[i] - diag[j]);
      form.c[i * dim + j] = c;
      form.c[j * dim + i] = c;
    }
  }
  return form;
}

Complex norm(const AlgebraSpec& spec, const Element& x) {
  require_dim(spec, x);
  const std::size_t dim = spec.dim();
  if (dim == 16) return multiply(spec, x, conjugate(spec, x))[0];
  // C_ij x_i x_j with the C of norm_form(p, q, dim), summed in closed form.
  Complex sum{}, sum_sq{};
  for (std::size_t i = 1; i < dim; ++i) {
    sum += x[i];
    sum_sq += x[i] * x[i];
  }
  const Complex p = spec.p();
  return x[0] * x[0] - p * x[0] * sum + spec.q() * sum_sq + (p * p / 4.0) * (sum * sum - sum_sq);
}

Element inverse(const AlgebraSpec& spec, const Element& x, double tol) {
  const Complex n = norm(spec, x);
  if (std::abs(n) <= tol) {
    throw AlgebraError(ErrorCode::DegenerateNorm, "element has vanishing norm; no inverse");
  }
  return conjugate(spec, x) * (1.0 / n);
}

Element solve(const AlgebraSpec& spec, const Element& b, const Element& a, Side side,
              double tol) {
  require_dim(spec, a);
  const Complex n = norm(spec, b);
  if (std::abs(n) <= tol) {
    throw AlgebraError(ErrorCode::DegenerateNorm, "divisor has vanishing norm");
  }
  const Element b_bar = conjugate(spec, b);
  const Element num = side == Side::Left ? multiply(spec, b_bar, a) : multiply(spec, a, b_bar);
  return num * (1.0 / n);
}

Bracket bracket(const AlgebraSpec& spec, std::size_t i, std::size_t j) {
  require_imaginary_index(spec, i);
  require_imaginary_index(spec, j);
  const std::size_t dim = spec.dim();
  if (dim > 8) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "bracket formulas cover dims 2, 4 and 8");
  }
  const Complex p = spec.p();
  const Complex s = spec.sqrt_neg_d();
  Element comm(dim);
  for (std::size_t k = 1; k < dim; ++k) {
    if (const int eps = levi_civita(dim, i, j, k); eps != 0) {
      comm[0] += 2.0 * double(eps) * s * (p / 2.0);
      comm[k] += 2.0 * double(eps) * s;
    }
  }
  Element anti(dim);
  anti[0] = 2.0 * ((i == j ? spec.discriminant() : Complex{}) - p * p / 4.0);
  anti[i] -= p;
  anti[j] -= p;
  return {std::move(comm), std::move(anti)};
}

Element associator_direct(const AlgebraSpec& spec, const Element& x, const Element& y,
                          const Element& z) {
  return multiply(spec, multiply(spec, x, y), z) - multiply(spec, x, multiply(spec, y, z));
}

Element associator_formula(const AlgebraSpec& spec, std::size_t i, std::size_t j, std::size_t k) {
  require_imaginary_index(spec, i);
  require_imaginary_index(spec, j);
  require_imaginary_index(spec, k);
  const std::size_t dim = spec.dim();
  if (dim > 8) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "associator formula covers dims 2, 4 and 8");
  }
  const auto delta = [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; };
  const auto eps = [dim](std::size_t a, std::size_t b, std::size_t c) {
    return double(levi_civita(dim, a, b, c));
  };

  // e_r coefficient: Σ_m ε_ijm ε_mkr - Σ_n ε_jkn ε_inr
  Element out(dim);
  Complex contraction_sum{};
  for (std::size_t r = 1; r < dim; ++r) {
    double c = 0.0;
    for (std::size_t m = 1; m < dim; ++m) c += eps(i, j, m) * eps(m, k, r) - eps(j, k, m) * eps(i, m, r);
    out[r] = c;
    contraction_sum += c;
  }
  out[i] += delta(j, k);
  out[k] -= delta(i, j);
  out[0] = -(spec.p() / 2.0) * (delta(i, j) - delta(j, k) - contraction_sum);
  return out * (-spec.discriminant());
}

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::Division: return "division";
    case Kind::Split: return "split";
    case Kind::NilDegenerate: return "nil-degenerate";
  }
  return "?";
}

Classification classify(Complex p, Complex q, std::size_t dim, double tol) {
  if (!is_valid_dim(dim)) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "classification dim must be 1..16");
  }
  const NormForm form = norm_form(p, q, dim);
  Classification out;
  for (std::size_t m = 1; m <= dim; ++m) {
    std::vector<Complex> sub(m * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) sub[r * m + c] = form(r, c);
    out.minors.push_back(determinant(std::move(sub), m));
  }
  const Complex neg_d = q - p * p / 4.0;
  if (std::abs(neg_d) <= tol) out.kind = Kind::NilDegenerate;
  else if (is_real(p) && is_real(q) && neg_d.real() > tol) out.kind = Kind::Division;
  else out.kind = Kind::Split;
  return out;
}

Signature signature(const NormForm& form, double tol) {
  const auto n = static_cast<Eigen::Index>(form.dim);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Complex v = form(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (!is_real(v)) {
        throw AlgebraError(ErrorCode::ComplexParameters, "norm form has complex entries");
      }
      m(r, c) = v.real();
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const double threshold = tol * std::max(1.0, values.cwiseAbs().maxCoeff());
  Signature s;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > threshold) ++s.positive;
    else if (values[i] < -threshold) ++s.negative;
    else ++s.zero;
  }
  return s;
}

bool norms_equivalent(const AlgebraSpec& a, const AlgebraSpec& b, double tol) {
  if (a.dim() != b.dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "norm equivalence needs equal dims");
  }
  for (const AlgebraSpec* s : {&a, &b}) {
    if (!is_real(s->p()) || !is_real(s->q())) {
      throw AlgebraError(ErrorCode::ComplexParameters,
                         "norm equivalence is decided over the reals only");
    }
  }
  return signature(norm_form(a), tol) == signature(norm_form(b), tol);
}

std::string_view to_string(Identity identity) noexcept {
  switch (identity) {
    case Identity::Commutativity: return "commutativity";
    case Identity::Associativity: return "associativity";
    case Identity::LeftAlternative: return "left-alt";
    case Identity::RightAlternative: return "right-alt";
    case Identity::Flexible: return "flexible";
    case Identity::NormComposition: return "norm-composition";
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view text) noexcept {
  for (Identity id : {Identity::Commutativity, Identity::Associativity, Identity::LeftAlternative,
                      Identity::RightAlternative, Identity::Flexible, Identity::NormComposition}) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::size_t arity(Identity identity) noexcept {
  return identity == Identity::Associativity ? 3 : 2;
}

double identity_residual(const AlgebraSpec& spec, Identity identity, const Element& x,
                         const Element& y, const Element& z) {
  const auto mul = [&spec](const Element& a, const Element& b) { return multiply(spec, a, b); };
  switch (identity) {
    case Identity::Commutativity:
      return relative_residual(mul(x, y), mul(y, x));
    case Identity::Associativity:
      return relative_residual(mul(mul(x, y), z), mul(x, mul(y, z)));
    case Identity::LeftAlternative:
      return relative_residual(mul(x, mul(x, y)), mul(mul(x, x), y));
    case Identity::RightAlternative:
      return relative_residual(mul(mul(y, x), x), mul(y, mul(x, x)));
    case Identity::Flexible:
      return relative_residual(mul(x, mul(y, x)), mul(mul(x, y), x));
    case Identity::NormComposition:
      return relative_residual(norm(spec, mul(x, y)), norm(spec, x) * norm(spec, y));
  }
  return 0.0;
}

IdentityReport check_identity(const AlgebraSpec& spec, Identity identity, std::size_t trials,
                              std::uint64_t seed, double tol, unsigned workers) {
  if (trials == 0) {
    throw AlgebraError(ErrorCode::InvalidArgument, "identity check needs at least one trial");
  }
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::size_t>(trials, 64)));
  std::vector<WorkerResult> results(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = trials * w / workers;
      const std::size_t end = trials * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        results[w] = run_trials(spec, identity, begin, end, seed, tol);
      });
    }
  }
  IdentityReport report{identity, trials, 0.0, std::nullopt, seed, tol};
  // Blocks are ordered by trial index, so the first failing block holds the
  // globally first counterexample.
  for (auto& r : results) {
    report.max_residual = std::max(report.max_residual, r.max_residual);
    if (!report.counterexample && r.first_failure) report.counterexample = std::move(r.first_failure);
  }
  return report;
}

}  // namespace cayley
