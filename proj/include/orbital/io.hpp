#pragma once

/**
 * @file io.hpp
 * @brief JSON readers for posets, graphs and groups, and JSON writers for
 * polynomials. User-facing element names are mapped to 0-based indices
 * through a symbol table kept next to each structure.
 *
 *   poset: {"elements": ["a","b"], "relations": [["a","b"]]}
 *   graph: {"vertices": ["u","v"], "edges": [["u","v"]]}
 *   group: {"degree": 2, "generators": ["(a b)"]}
 */

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbital/errors.hpp"
#include "orbital/graph.hpp"
#include "orbital/permgroup.hpp"
#include "orbital/polynomial.hpp"
#include "orbital/poset.hpp"

namespace orbital::io {

using Json = nlohmann::ordered_json;

class SymbolTable {
 public:
  SymbolTable() = default;

  explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("empty element name", ErrorCode::malformed_input);
      if (!index_.emplace(names_[i], i).second) {
        throw InputError("duplicate element name '" + names_[i] + "'", ErrorCode::malformed_input);
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError("unknown element '" + name + "'", ErrorCode::unknown_element);
    return it->second;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

struct NamedPoset {
  SymbolTable symbols;
  Poset poset;
};

struct NamedGraph {
  SymbolTable symbols;
  SimpleGraph graph;
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'", ErrorCode::malformed_input);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what(), ErrorCode::malformed_input);
  }
}

namespace detail {

inline std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw InputError(std::string("expected an array \"") + key + "\"", ErrorCode::malformed_input);
  }
  std::vector<std::string> out;
  for (const auto& item : j.at(key)) {
    if (!item.is_string()) throw InputError(std::string("\"") + key + "\" must hold strings", ErrorCode::malformed_input);
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> name_pairs(const Json& j, const char* key,
                                                                   const SymbolTable& symbols) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) throw InputError(std::string("\"") + key + "\" must be an array", ErrorCode::malformed_input);
  for (const auto& item : j.at(key)) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw InputError(std::string("each entry of \"") + key + "\" must be a pair of names",
                       ErrorCode::malformed_input);
    }
    out.emplace_back(symbols.index(item[0].get<std::string>()), symbols.index(item[1].get<std::string>()));
  }
  return out;
}

}  // namespace detail

inline NamedPoset parse_poset(const Json& j) {
  NamedPoset out{SymbolTable(detail::string_list(j, "elements")), {}};
  out.poset = poset_from_relations(out.symbols.size(), detail::name_pairs(j, "relations", out.symbols));
  return out;
}

inline NamedGraph parse_graph(const Json& j) {
  NamedGraph out{SymbolTable(detail::string_list(j, "vertices")), {}};
  out.graph = SimpleGraph(out.symbols.size(), detail::name_pairs(j, "edges", out.symbols));
  return out;
}

/// Parses "(a b c)(d e)" over the symbol table. "()" and "" are the identity.
inline Permutation parse_cycles(const std::string& text, const SymbolTable& symbols) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in \"" + text + "\"", ErrorCode::malformed_input);
    ++i;
    std::vector<std::size_t> cyc;
    while (true) {
      skip_space();
      if (i >= text.size()) throw InputError("unclosed cycle in \"" + text + "\"", ErrorCode::malformed_input);
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] != ')' && text[i] != '(' && text[i] != ',' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      if (i < text.size() && text[i] == '(') throw InputError("nested '(' in \"" + text + "\"", ErrorCode::malformed_input);
      cyc.push_back(symbols.index(text.substr(start, i - start)));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_space();
  }
  try {
    return Permutation::from_cycles(symbols.size(), cycles);
  } catch (const InputError&) {
    throw InputError("element repeated in \"" + text + "\"", ErrorCode::malformed_input);
  }
}

/// Group file over the element names of the structure it acts on. The
/// declared degree must equal the number of elements.
inline PermGroup parse_group(const Json& j, const SymbolTable& symbols) {
  if (!j.is_object() || !j.contains("degree") || !j.at("degree").is_number_unsigned()) {
    throw InputError("group needs a non-negative integer \"degree\"", ErrorCode::malformed_input);
  }
  const auto degree = j.at("degree").get<std::size_t>();
  if (degree != symbols.size()) {
    throw InputError("group degree " + std::to_string(degree) + " != " + std::to_string(symbols.size()) +
                         " elements",
                     ErrorCode::degree_mismatch);
  }
  std::vector<Permutation> gens;
  for (const auto& text : detail::string_list(j, "generators")) gens.push_back(parse_cycles(text, symbols));
  return closure(gens, degree);
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const RationalPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  Json out;
  out["degree"] = p.degree();
  out["coefficients"] = std::move(coeffs);
  return out;
}

inline RationalPolynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& s : j.at("coefficients")) c.push_back(parse_rational(s.get<std::string>()));
  return RationalPolynomial(std::move(c));
}

// Cycle notation over user names.
inline std::string format_permutation(const Permutation& g, const SymbolTable& symbols) {
  std::string out;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t s = 0; s < g.degree(); ++s) {
    if (seen[s] || g(s) == s) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = g(x)) {
      if (x != s) out += " ";
      out += symbols.name(x);
      seen[x] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace orbital::io
