#pragma once

// Subspace interchange files (JSON).
//
//   {
//     "n": 3,
//     "d": 2,
//     "order": "lex",
//     "generators": [ {"x1^2": "1", "x2^2": "-1/2"}, ... ]
//   }
//
// Instead of "generators" a file may give "complement_monomials": a list of
// monomials whose span W defines the space as the apolar complement W^perp.
// Coefficients are strings "p" or "p/q". Monomials use the x1^2*x3 syntax;
// "1" is the constant monomial. Writers always emit the canonical echelon
// basis as generators, so a round trip reproduces the space exactly.

#include "form_space.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gramface {

class SpaceFileError : public std::runtime_error {
 public:
  SpaceFileError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what : what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline FormSpace parse_space(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    const auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    throw SpaceFileError(pos == std::string::npos ? msg : msg.substr(pos), line, col);
  }
  if (!doc.is_object()) throw SpaceFileError("top level must be an object");
  auto get_int = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) throw SpaceFileError(std::string("missing integer field '") + key + "'");
    return doc[key].get<long>();
  };
  const long n = get_int("n");
  const long d = get_int("d");
  if (n < 1 || n > kMaxVars) throw SpaceFileError("n out of range");
  if (d < 0 || d > kMaxExponent) throw SpaceFileError("d out of range");
  MonomialOrder order = MonomialOrder::lex(static_cast<int>(n));
  if (doc.contains("order")) {
    if (!doc["order"].is_string()) throw SpaceFileError("'order' must be a string");
    try {
      order = MonomialOrder::parse(doc["order"].get<std::string>(), static_cast<int>(n));
    } catch (const std::exception& e) {
      throw SpaceFileError(std::string("order: ") + e.what());
    }
  }
  auto monomial = [&](const std::string& s, const std::string& where) {
    Monomial m;
    try {
      m = parse_monomial(s, static_cast<int>(n));
    } catch (const std::exception& e) {
      throw SpaceFileError(where + ": " + e.what());
    }
    if (m.degree() != d) throw SpaceFileError(where + ": monomial '" + s + "' has degree " + std::to_string(m.degree()) + ", expected " + std::to_string(d));
    return m;
  };
  const bool has_gens = doc.contains("generators");
  const bool has_comp = doc.contains("complement_monomials");
  if (has_gens == has_comp) throw SpaceFileError("exactly one of 'generators' and 'complement_monomials' is required");
  if (has_gens) {
    const auto& gens = doc["generators"];
    if (!gens.is_array()) throw SpaceFileError("'generators' must be a list");
    std::vector<Form> forms;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string where = "generator " + std::to_string(g + 1);
      if (!gens[g].is_object()) throw SpaceFileError(where + ": expected a monomial -> coefficient map");
      Form f(static_cast<int>(n), static_cast<int>(d));
      for (const auto& [key, val] : gens[g].items()) {
        if (!val.is_string()) throw SpaceFileError(where + ": coefficient of '" + key + "' must be a string");
        Rational c;
        try {
          c = parse_rational(val.get<std::string>());
        } catch (const std::exception& e) {
          throw SpaceFileError(where + ": " + e.what());
        }
        f.add_term(monomial(key, where), c);
      }
      forms.push_back(std::move(f));
    }
    return FormSpace::span(static_cast<int>(n), static_cast<int>(d), forms, order);
  }
  const auto& comp = doc["complement_monomials"];
  if (!comp.is_array()) throw SpaceFileError("'complement_monomials' must be a list");
  std::vector<Monomial> monos;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (!comp[i].is_string()) throw SpaceFileError("complement monomial " + std::to_string(i + 1) + " must be a string");
    monos.push_back(monomial(comp[i].get<std::string>(), "complement monomial " + std::to_string(i + 1)));
  }
  return apolar_complement(FormSpace::monomial_span(static_cast<int>(n), static_cast<int>(d), monos, order));
}

inline FormSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpaceFileError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

inline std::string serialize_space(const FormSpace& U) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = U.vars();
  doc["d"] = U.degree();
  doc["order"] = U.order().to_string();
  ordered_json gens = ordered_json::array();
  for (const auto& r : U.rows()) {
    ordered_json g = ordered_json::object();
    for (const auto& e : r) g[to_string(U.basis()[e.col])] = e.val.get_str();
    gens.push_back(std::move(g));
  }
  doc["generators"] = std::move(gens);
  return doc.dump(2) + "\n";
}

inline void save_space(const FormSpace& U, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SpaceFileError("cannot write '" + path + "'");
  out << serialize_space(U);
}

}  // namespace gramface
