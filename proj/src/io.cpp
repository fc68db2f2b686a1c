#include "torus/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "torus/families.hpp"

namespace torus {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Rational read_value(const ordered_json& v, const std::string& path, ArithmeticMode mode) {
  Rational exact;
  if (v.is_string()) {
    try {
      exact = parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      field_error(path, e.what());
    }
  } else if (v.is_number_integer()) {
    exact = Rational(v.dump());
  } else if (v.is_number_float()) {
    // The shortest round-trip decimal, so 0.1 reads as 1/10 in exact mode.
    exact = parse_rational(v.dump());
  } else {
    field_error(path, "value must be a string or a number");
  }
  return mode == ArithmeticMode::exact ? exact : rational_from_double(to_double(exact));
}

int read_int(const ordered_json& doc, const char* key, const std::string& path) {
  if (!doc.contains(key)) field_error(path, std::string("missing \"") + key + "\"");
  const ordered_json& v = doc.at(key);
  if (!v.is_number_integer()) field_error(path + "." + key, "must be an integer");
  return v.get<int>();
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PolynomialInput parse_polynomial(std::string_view text, ArithmeticMode mode) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, line_column(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) field_error("$", "document must be an object");

  PolynomialInput in;
  in.input_hash = fnv1a_hex(text);
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) field_error("$.label", "must be a string");
    in.label = doc["label"].get<std::string>();
  }

  if (doc.contains("family")) {
    const ordered_json& fam = doc["family"];
    if (!fam.is_object() || !fam.contains("name") || !fam["name"].is_string()) {
      field_error("$.family", "expected {\"name\": string, \"n\": integer}");
    }
    const std::string name = fam["name"].get<std::string>();
    if (name != "vertical_lines") field_error("$.family.name", "unknown family \"" + name + "\"");
    const int n = read_int(fam, "n", "$.family");
    if (n < 2) throw Error(ErrorKind::InvariantViolation, "vertical_lines family needs n >= 2");
    in.family = name;
    in.family_n = n;
    in.h = vertical_lines_family(n);
    in.degree = n;
    return in;
  }

  const int degree = read_int(doc, "degree", "$");
  if (degree < 0) throw Error(ErrorKind::InvariantViolation, "degree must be non-negative");
  if (!doc.contains("terms") || !doc["terms"].is_array()) field_error("$.terms", "missing array");

  std::vector<Term> terms;
  std::set<std::pair<int, int>> seen;
  std::size_t index = 0;
  for (const ordered_json& t : doc["terms"]) {
    const std::string path = "$.terms[" + std::to_string(index++) + "]";
    if (!t.is_object()) field_error(path, "term must be an object");
    const int k = read_int(t, "k", path), j = read_int(t, "j", path);
    if (!t.contains("value")) field_error(path, "missing \"value\"");
    const Rational value = read_value(t["value"], path + ".value", mode);
    if (j < 0 || j > k) {
      throw Error(ErrorKind::InvariantViolation, path + ": term (k, j) must satisfy 0 <= j <= k");
    }
    if (k > degree) throw Error(ErrorKind::InvariantViolation, path + ": k exceeds the declared degree");
    if (!seen.insert({k, j}).second) throw Error(ErrorKind::InvariantViolation, path + ": duplicate term (k, j)");
    terms.push_back({k, j, value});
  }
  in.h = BivariatePolynomial::from_terms(terms);
  const bool zero = in.h.is_zero();
  if ((zero && degree != 0) || (!zero && in.h.degree() != degree)) {
    throw Error(ErrorKind::InvariantViolation, "degree is not tight: no nonzero term with k = " + std::to_string(degree));
  }
  in.degree = degree;
  return in;
}

PolynomialInput read_polynomial_file(const std::string& path, ArithmeticMode mode) {
  return parse_polynomial(read_text_file(path), mode);
}

ordered_json polynomial_to_json(const BivariatePolynomial& h, const std::string& label) {
  ordered_json out;
  if (!label.empty()) out["label"] = label;
  out["degree"] = h.is_zero() ? 0 : h.degree();
  ordered_json terms = ordered_json::array();
  for (const Term& t : h.terms()) {
    ordered_json term;
    term["k"] = t.k;
    term["j"] = t.j;
    term["value"] = to_string(t.value);
    terms.push_back(term);
  }
  out["terms"] = terms;
  return out;
}

}  // namespace torus
