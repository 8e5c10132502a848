#include "cayley/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 8> kCoefficientUnits{"1", "i", "j", "k", "l", "m", "n", "o"};

[[noreturn]] void bad_literal(std::string_view text) {
  throw AlgebraError(ErrorCode::InvalidArgument,
                     "cannot parse complex literal '" + std::string(text) + "'");
}

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) bad_literal(whole);
  return value;
}

double clean(double x) { return x == 0.0 ? 0.0 : x; }

std::string unit_name(std::size_t index, UnitNames names) {
  if (names == UnitNames::Coefficient && index < kCoefficientUnits.size()) {
    return std::string(kCoefficientUnits[index]);
  }
  return "e" + std::to_string(index);
}

std::string render_term(Complex c, const std::string& unit) {
  const bool is_one_unit = unit == "1";
  if (c.imag() == 0.0) {
    if (c.real() == 1.0) return unit;
    if (c.real() == -1.0) return is_one_unit ? "-1" : "-" + unit;
    return is_one_unit ? format_real(c.real()) : format_real(c.real()) + "*" + unit;
  }
  if (c.real() == 0.0) {
    const std::string im = format_complex(c);  // "bi"
    return is_one_unit ? im : im + "*" + unit;
  }
  const std::string z = "(" + format_complex(c) + ")";
  return is_one_unit ? z : z + "*" + unit;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) bad_literal(text);
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  s.remove_suffix(1);
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
  double im = 0.0;
  if (im_part.empty() || im_part == "+") im = 1.0;
  else if (im_part == "-") im = -1.0;
  else im = parse_real(im_part, text);
  return {re_part.empty() ? 0.0 : parse_real(re_part, text), im};
}

Element parse_element(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    coeffs.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!is_valid_dim(coeffs.size())) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       "element needs 1, 2, 4, 8 or 16 coefficients, got " +
                           std::to_string(coeffs.size()));
  }
  return Element(std::move(coeffs));
}

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), clean(x));
  return std::string(buf.data(), result.ptr);
}

std::string format_complex(Complex z) {
  const double re = clean(z.real());
  const double im = clean(z.imag());
  if (im == 0.0) return format_real(re);
  std::string im_text;
  if (im == 1.0) im_text = "i";
  else if (im == -1.0) im_text = "-i";
  else im_text = format_real(im) + "i";
  if (re == 0.0) return im_text;
  return format_real(re) + (im_text.front() == '-' ? "" : "+") + im_text;
}

std::string format_element(const Element& x, UnitNames names) {
  std::string out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] == Complex{}) continue;
    std::string term = render_term(x[i], unit_name(i, names));
    if (out.empty()) {
      out = std::move(term);
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_mat2(const Mat2& m) {
  const auto cell = [&m](std::size_t r, std::size_t c) {
    return format_element(m(r, c), UnitNames::Coefficient);
  };
  return "[[" + cell(0, 0) + ", " + cell(0, 1) + "], [" + cell(1, 0) + ", " + cell(1, 1) + "]]";
}

json complex_to_json(Complex z) { return json::array({clean(z.real()), clean(z.imag())}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw AlgebraError(ErrorCode::InvalidArgument, "complex JSON must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json element_to_json(const Element& x) {
  json coeffs = json::array();
  for (const Complex& c : x.coeffs()) coeffs.push_back(complex_to_json(c));
  return {{"dim", x.dim()}, {"coeffs", std::move(coeffs)}};
}

Element element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw AlgebraError(ErrorCode::InvalidArgument, "element JSON needs \"dim\" and \"coeffs\"");
  }
  std::vector<Complex> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(complex_from_json(c));
  if (j["dim"].get<std::size_t>() != coeffs.size()) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "element JSON dim disagrees with coeffs");
  }
  return Element(std::move(coeffs));
}

json mat2_to_json(const Mat2& m) {
  return {{"coeff_dim", m.coeff_dim()},
          {"entries", json::array({json::array({element_to_json(m(0, 0)), element_to_json(m(0, 1))}),
                                   json::array({element_to_json(m(1, 0)), element_to_json(m(1, 1))})})}};
}

Mat2 mat2_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || j["entries"].size() != 2 ||
      j["entries"][0].size() != 2 || j["entries"][1].size() != 2) {
    throw AlgebraError(ErrorCode::InvalidArgument, "matrix JSON needs a 2x2 \"entries\" array");
  }
  const auto& e = j["entries"];
  Mat2 m(element_from_json(e[0][0]), element_from_json(e[0][1]), element_from_json(e[1][0]),
         element_from_json(e[1][1]));
  if (j.contains("coeff_dim") && j["coeff_dim"].get<std::size_t>() != m.coeff_dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "matrix JSON coeff_dim disagrees with entries");
  }
  return m;
}

json report_to_json(const IdentityReport& report) {
  json ce = nullptr;
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    ce = {{"trial", c.trial}, {"X", element_to_json(c.x)}, {"Y", element_to_json(c.y)}};
    if (c.z) ce["Z"] = element_to_json(*c.z);
  }
  return {{"identity", std::string(to_string(report.identity))},
          {"trials", report.trials},
          {"max_residual", report.max_residual},
          {"counterexample", std::move(ce)},
          {"seed", report.seed}};
}

json rep_report_to_json(const RepReport& report) {
  return {{"action_checks", report.action_checks},
          {"action_failures", report.action_failures},
          {"max_action_residual", report.max_action_residual},
          {"product_checks", report.product_checks},
          {"product_failures", report.product_failures},
          {"max_product_residual", report.max_product_residual},
          {"untrusted", report.untrusted},
          {"seed", report.seed},
          {"passed", report.passed()}};
}

std::string render_table_text(const AlgebraSpec& spec) {
  const std::size_t dim = spec.dim();
  std::vector<std::vector<std::string>> cells(dim + 1, std::vector<std::string>(dim + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    cells[0][i + 1] = "e" + std::to_string(i);
    cells[i + 1][0] = "e" + std::to_string(i);
    for (std::size_t j = 0; j < dim; ++j) cells[i + 1][j + 1] = format_element(spec.table().entry(i, j));
  }
  std::vector<std::size_t> width(dim + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= dim; ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  out << to_string(spec.family()) << "(" << format_complex(spec.p()) << ","
      << format_complex(spec.q()) << ")\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c <= dim; ++c) {
      line += row[c];
      if (c < dim) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string render_table_csv(const AlgebraSpec& spec) {
  const std::size_t dim = spec.dim();
  std::ostringstream out;
  for (std::size_t j = 0; j < dim; ++j) out << ",e" << j;
  out << '\n';
  for (std::size_t i = 0; i < dim; ++i) {
    out << 'e' << i;
    for (std::size_t j = 0; j < dim; ++j) out << ',' << format_element(spec.table().entry(i, j));
    out << '\n';
  }
  return out.str();
}

json table_to_json(const AlgebraSpec& spec) {
  json rows = json::array();
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < spec.dim(); ++j) row.push_back(element_to_json(spec.table().entry(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"family", std::string(to_string(spec.family()))},
          {"dim", spec.dim()},
          {"p", complex_to_json(spec.p())},
          {"q", complex_to_json(spec.q())},
          {"table", std::move(rows)}};
}

}  // namespace cayley
