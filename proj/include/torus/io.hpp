#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "torus/bivariate.hpp"
#include "torus/enumeration.hpp"

namespace torus {

using ordered_json = nlohmann::ordered_json;

// A polynomial input file:
//   {"degree": n, "terms": [{"k": k, "j": j, "value": "p/q"}, ...], "label": "..."}
// with the monomial of term (k, j) being x^(k-j) y^j, or a generated family
//   {"family": {"name": "vertical_lines", "n": n}, "label": "..."}.
struct PolynomialInput {
  BivariatePolynomial h;
  int degree = 0;
  std::string label;
  // Set for family inputs.
  std::optional<std::string> family;
  std::optional<int> family_n;
  // FNV-1a hash of the raw file bytes.
  std::string input_hash;
};

// Values may be strings ("p/q", integers, decimals) or JSON numbers. Exact mode
// reads them as exact rationals (0.1 is 1/10); float mode rounds each value to
// the nearest double and keeps that double exactly.
// Throws ParseError (with line and column) for malformed JSON or fields, and
// InvariantViolation naming the violated coefficient-table invariant.
PolynomialInput parse_polynomial(std::string_view text, ArithmeticMode mode = ArithmeticMode::exact);

// Reads a file; throws ParseError when it cannot be opened.
PolynomialInput read_polynomial_file(const std::string& path, ArithmeticMode mode = ArithmeticMode::exact);

// Canonical echo of the coefficient table in the input format, values as "p/q".
ordered_json polynomial_to_json(const BivariatePolynomial& h, const std::string& label = "");

std::string fnv1a_hex(std::string_view bytes);

std::string read_text_file(const std::string& path);

}  // namespace torus
