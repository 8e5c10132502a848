#pragma once

// Shared helpers for the unit tests: random parameters and reference
// multiplications written without the library's product code.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/element.hpp"
#include "cayley/errors.hpp"
#include "cayley/random.hpp"

namespace cayley::test {

using CVec = std::vector<Complex>;

struct Params {
  Complex p, q;
};

inline std::vector<Params> random_params(std::uint64_t seed, std::size_t count,
                                         double min_abs_d = 0.0) {
  std::vector<Params> out;
  SplitMix64 rng(seed);
  while (out.size() < count) {
    const Complex p = 2.0 * rng.complex_unit_box();
    const Complex q = 2.0 * rng.complex_unit_box();
    if (std::abs(p * p / 4.0 - q) > min_abs_d) out.push_back({p, q});
  }
  return out;
}

// w1 w2 - v1.v2,  w1 v2 + w2 v1 + v1 x v2
inline CVec hamilton(const CVec& a, const CVec& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3],
          a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1]};
}

inline CVec cd_conj(const CVec& a) {
  CVec out(a.size());
  out[0] = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// Textbook doubling (a, b)(c, d) = (ac - d̄ b, d a + b c̄), real form (0, 1).
inline CVec cd_standard(const CVec& x, const CVec& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const CVec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const CVec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const CVec ac = cd_standard(a, c), db = cd_standard(cd_conj(d), b);
  const CVec da = cd_standard(d, a), bc = cd_standard(b, cd_conj(c));
  CVec out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[h + i] = da[i] + bc[i];
  }
  return out;
}

// (a + b x)(c + d x) in ℂ[x]/(x² + p x + q).
inline CVec polynomial_product(const CVec& u, const CVec& v, Complex p, Complex q) {
  const Complex bd = u[1] * v[1];
  return {u[0] * v[0] - q * bd, u[0] * v[1] + u[1] * v[0] - p * bd};
}

// Code of the AlgebraError thrown by fn, or nullopt when nothing is thrown.
template <class F>
std::optional<ErrorCode> error_code(F&& fn) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    return e.code();
  }
  return std::nullopt;
}

inline CVec to_vec(const Element& x) { return CVec(x.coeffs().begin(), x.coeffs().end()); }

inline double max_diff(const CVec& a, const CVec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace cayley::test
