#pragma once

// Text and JSON forms of elements, tables, matrices and reports.
//
// Element JSON:  {"dim": d, "coeffs": [[re, im], ...]}
// Matrix JSON:   {"coeff_dim": d, "entries": [[Element, Element], [Element, Element]]}
// Report JSON:   {"identity": name, "trials": n, "max_residual": r,
//                 "counterexample": {"trial": t, "X": ..., "Y": ..., "Z": ...} | null,
//                 "seed": s}

#include <string>
#include <string_view>

#include <json.hpp>

#include "cayley/algebra.hpp"
#include "cayley/analysis.hpp"
#include "cayley/representation.hpp"

namespace cayley {

/// "0", "-1", "0.5+2i", "i", "-2.5i", "1e-3-4i". Throws InvalidArgument.
Complex parse_complex(std::string_view text);

/// Comma-separated complex literals, e.g. "1,0,i,-0.5+2i".
Element parse_element(std::string_view text);

/// Shortest round-trip decimal; negative zero prints as "0".
std::string format_real(double x);
std::string format_complex(Complex z);

enum class UnitNames {
  Indexed,     // e0, e1, ..., e15
  Coefficient  // 1, i, j, k, l, m, n, o (dims up to 8)
};

/// Signed sum of terms, e.g. "-e3", "-1.3*e0 - 0.7*e1", "(1+2i)*e2", "0".
std::string format_element(const Element& x, UnitNames names = UnitNames::Indexed);

std::string format_mat2(const Mat2& m);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);
nlohmann::json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const IdentityReport& report);
nlohmann::json rep_report_to_json(const RepReport& report);

/// Grid of rendered unit products with e0..e{d-1} row and column headers.
std::string render_table_text(const AlgebraSpec& spec);
std::string render_table_csv(const AlgebraSpec& spec);
nlohmann::json table_to_json(const AlgebraSpec& spec);

}  // namespace cayley
