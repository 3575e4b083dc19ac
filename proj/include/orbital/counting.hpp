#pragma once

/**
 * @file counting.hpp
 * @brief Orbital order polynomials of a poset under a group of
 * automorphisms, computed two independent ways:
 *
 *  - formula route: (1/|G|) sum_g Omega_{P_g}(n), where P_g is the quotient
 *    of P by the cycles of g;
 *  - oracle route: enumerate Hom(P,[n]) and count maps that are the
 *    lexicographic minimum of their G-orbit.
 *
 * Also the sign-filtered ("even") orbit counts that appear when the
 * polynomials are evaluated at negative integers.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbital/errors.hpp"
#include "orbital/label_map.hpp"
#include "orbital/permgroup.hpp"
#include "orbital/polynomial.hpp"
#include "orbital/poset.hpp"

namespace orbital {

inline constexpr std::uint64_t default_budget = 2'000'000;

// Throws ResourceError when base^exponent * factor exceeds budget.
inline void require_budget(std::uint64_t base, std::size_t exponent, std::uint64_t factor,
                           std::uint64_t budget, const std::string& what) {
  Integer need = factor;
  for (std::size_t i = 0; i < exponent; ++i) need *= base;
  if (need > budget) {
    throw ResourceError(what + " needs " + need.str() + " enumerated objects, budget is " +
                        std::to_string(budget));
  }
}

namespace detail {

// For one object x under G: whether x is the lexicographic minimum of its
// orbit and whether every stabilizer element has sign +1.
struct OrbitClass {
  bool canonical = true;
  bool even = true;
};

template <class Object, class Action>
OrbitClass classify(const PermGroup& G, const std::vector<int>& signs, const Object& x, Action act) {
  OrbitClass out;
  for (std::size_t i = 0; i < G.order(); ++i) {
    Object y = act(G.elements()[i], x);
    if (y < x) out.canonical = false;
    if (y == x && signs[i] < 0) out.even = false;
  }
  return out;
}

inline std::vector<int> signs_of(const PermGroup& G) {
  std::vector<int> s;
  s.reserve(G.order());
  for (const auto& g : G) s.push_back(sign(g));
  return s;
}

inline void require_order_action(const Poset& P, const PermGroup& G) {
  if (G.degree() != P.size()) {
    throw InputError("group degree " + std::to_string(G.degree()) + " != poset size " +
                         std::to_string(P.size()),
                     ErrorCode::degree_mismatch);
  }
  if (auto check = is_order_action(P, G); !check) {
    throw PreconditionError("group does not act by automorphisms: " + describe(*check.witness));
  }
}

}  // namespace detail

enum class Parity { any, even_only };

/// Number of G-orbits of Hom(P,[n]) (or Hom°), by enumeration and
/// canonical representatives; no Burnside averaging. With
/// Parity::even_only only orbits of even maps are counted.
inline std::uint64_t orbit_count_oracle(const Poset& P, const PermGroup& G, int n, bool strict,
                                        std::uint64_t budget = default_budget,
                                        Parity parity = Parity::any) {
  detail::require_order_action(P, G);
  if (n <= 0) return P.size() == 0 ? 1 : 0;
  require_budget(static_cast<std::uint64_t>(n), P.size(), 1, budget, "orbit enumeration");
  const auto signs = detail::signs_of(G);
  std::uint64_t count = 0;
  for_each_hom(P, n, strict, [&](const std::vector<int>& values) {
    LabelMap f;
    f.values = values;
    f.n = n;
    auto cls = detail::classify(G, signs, f, act_on_map);
    if (cls.canonical && (parity == Parity::any || cls.even)) ++count;
  });
  return count;
}

/// |Hom(P,[n])^g|, computed as the hom count of the quotient poset P_g.
inline std::uint64_t fixed_hom_count(const Poset& P, const Permutation& g, int n, bool strict) {
  return count_homs(quotient_poset(P, g).poset, n, strict);
}

/// Every stabilizer element of f in G has sign +1.
inline bool is_even_map(const LabelMap& f, const PermGroup& G) {
  for (const auto& g : G)
    if (sign(g) < 0 && fixes_map(g, f)) return false;
  return true;
}

struct ElementSummary {
  Permutation element;
  std::size_t cycle_count = 0;
  RationalPolynomial polynomial;  // this element's summand
  std::size_t fixed_orientations = 0;  // graphs only: |Sigma^g|
};

struct ValueRow {
  int n = 0;
  Rational formula;
  std::optional<std::uint64_t> oracle;

  bool agrees() const { return !oracle || formula == Rational(*oracle); }
};

struct OrbitalResult {
  RationalPolynomial polynomial;
  std::vector<ElementSummary> per_group_element;
  std::vector<ValueRow> value_table;

  bool routes_agree() const {
    for (const auto& row : value_table)
      if (!row.agrees()) return false;
    return true;
  }
};

struct OrbitalOptions {
  bool oracle = true;             // fill the oracle column of the value table
  bool enforce = true;            // throw ConsistencyError when the columns differ
  int max_n = 0;                  // table rows n = 1..max_n; 0 means |ground| + 1
  std::uint64_t budget = default_budget;
};

namespace detail {

inline void check_orbital_degree(const RationalPolynomial& p, std::size_t expected, const char* what) {
  if (p.degree() != static_cast<int>(expected) || p.leading() <= 0) {
    throw ConsistencyError(std::string(what) + " has degree " + std::to_string(p.degree()) +
                           ", expected " + std::to_string(expected) + " with positive leading term");
  }
}

inline void enforce_table(const OrbitalResult& r, const OrbitalOptions& opt) {
  if (!opt.enforce) return;
  for (const auto& row : r.value_table) {
    if (!row.agrees()) {
      throw ConsistencyError("formula and oracle differ at n = " + std::to_string(row.n) + ": " +
                             to_string(row.formula) + " vs " + std::to_string(*row.oracle));
    }
  }
}

}  // namespace detail

/// Omega_{P,G} (or the strict variant) as the group average of quotient
/// order polynomials. Degree is checked to be |P|.
inline OrbitalResult orbital_order_polynomial(const Poset& P, const PermGroup& G, bool strict,
                                              const OrbitalOptions& opt = {}) {
  detail::require_order_action(P, G);
  OrbitalResult r;
  std::vector<WeightedTerm> terms;
  const Rational weight(1, G.order());
  for (const auto& g : G) {
    auto Q = quotient_poset(P, g);
    if (Q.poset.size() != cycle_count(g)) throw ConsistencyError("quotient size differs from c(g)");
    ElementSummary s{g, Q.poset.size(), order_polynomial(Q.poset, strict)};
    terms.push_back({weight, s.polynomial});
    r.per_group_element.push_back(std::move(s));
  }
  r.polynomial = scale_add(terms);
  detail::check_orbital_degree(r.polynomial, P.size(), "orbital order polynomial");

  const int rows = opt.max_n > 0 ? opt.max_n : static_cast<int>(P.size()) + 1;
  for (int n = 1; n <= rows; ++n) {
    ValueRow row{n, r.polynomial(Rational(n)), std::nullopt};
    if (opt.oracle) row.oracle = orbit_count_oracle(P, G, n, strict, opt.budget);
    r.value_table.push_back(std::move(row));
  }
  detail::enforce_table(r, opt);
  return r;
}

struct ReciprocityRow {
  int n = 0;
  Rational weak_at_minus_n;          // Omega_{P,G}(-n)
  Rational strict_even_orbits;       // (-1)^|P| |Hom°_+(P,[n])/G|
  Rational strict_at_minus_n;        // Omega°_{P,G}(-n)
  Rational weak_even_orbits;         // (-1)^|P| |Hom_+(P,[n])/G|

  bool weak_holds() const { return weak_at_minus_n == strict_even_orbits; }
  bool strict_holds() const { return strict_at_minus_n == weak_even_orbits; }
};

struct ReciprocityReport {
  RationalPolynomial weak;
  RationalPolynomial strict;
  std::vector<ReciprocityRow> rows;

  bool passed() const {
    for (const auto& r : rows)
      if (!r.weak_holds() || !r.strict_holds()) return false;
    return true;
  }
};

/// Checks, for n = 1..n_max,
///   Omega_{P,G}(-n)  = (-1)^|P| |Hom°_+(P,[n])/G|
///   Omega°_{P,G}(-n) = (-1)^|P| |Hom_+(P,[n])/G|
/// with the right sides counted by enumeration.
inline ReciprocityReport verify_reciprocity(const Poset& P, const PermGroup& G, int n_max,
                                            std::uint64_t budget = default_budget) {
  OrbitalOptions opt;
  opt.oracle = false;
  ReciprocityReport rep;
  rep.weak = orbital_order_polynomial(P, G, false, opt).polynomial;
  rep.strict = orbital_order_polynomial(P, G, true, opt).polynomial;
  const Rational parity = P.size() % 2 == 0 ? 1 : -1;
  for (int n = 1; n <= n_max; ++n) {
    ReciprocityRow row;
    row.n = n;
    row.weak_at_minus_n = rep.weak(Rational(-n));
    row.strict_at_minus_n = rep.strict(Rational(-n));
    row.strict_even_orbits = parity * Rational(orbit_count_oracle(P, G, n, true, budget, Parity::even_only));
    row.weak_even_orbits = parity * Rational(orbit_count_oracle(P, G, n, false, budget, Parity::even_only));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace orbital
