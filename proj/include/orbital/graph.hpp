#pragma once

/**
 * @file graph.hpp
 * @brief Simple graphs under a group of automorphisms: proper colorings,
 * acyclic orientations, the orbital chromatic polynomial and the
 * reciprocity counts of weakly compatible (coloring, orientation) pairs.
 *
 * The orbital chromatic polynomial is computed two ways. The formula route
 * sums, for every g, the strict order polynomials of the quotients by g of
 * the posets induced by g-fixed acyclic orientations. The oracle route counts
 * g-fixed proper colorings directly, averages (Burnside) and interpolates.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbital/counting.hpp"
#include "orbital/errors.hpp"
#include "orbital/label_map.hpp"
#include "orbital/permgroup.hpp"
#include "orbital/polynomial.hpp"
#include "orbital/poset.hpp"

namespace orbital {

using Edge = std::pair<std::size_t, std::size_t>;

// Undirected simple graph on {0, ..., vertex_count-1}. Edges are stored as
// (u, v) with u < v, sorted; an edge's position in that list is its index.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), adjacent_(vertex_count * vertex_count, 0) {
    for (auto& [u, v] : edges) {
      if (u >= n_ || v >= n_) {
        throw InputError("edge endpoint outside a graph on " + std::to_string(n_) + " vertices");
      }
      if (u == v) throw InputError("loop at vertex " + std::to_string(u) + "; graphs must be simple");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw InputError("repeated edge; graphs must be simple");
    }
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) adjacent_[u * n_ + v] = adjacent_[v * n_ + u] = 1;
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacent_[u * n_ + v]; }

  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adjacent_;
};

inline SimpleGraph cycle_graph(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return SimpleGraph(k, e);
}

inline SimpleGraph complete_graph(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return SimpleGraph(k, e);
}

// head[i] is the head of edge i; the edge points from its other endpoint.
struct Orientation {
  std::vector<std::size_t> head;

  friend auto operator<=>(const Orientation&, const Orientation&) = default;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

struct CompatiblePair {
  LabelMap coloring;
  Orientation orientation;

  friend auto operator<=>(const CompatiblePair&, const CompatiblePair&) = default;
  friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
};

struct GraphActionWitness {
  Permutation element;
  Edge edge;
};

struct GraphActionCheck {
  std::optional<GraphActionWitness> witness;
  bool ok() const { return !witness.has_value(); }
  explicit operator bool() const { return ok(); }
};

inline GraphActionCheck is_graph_action(const SimpleGraph& graph, const PermGroup& G) {
  if (G.degree() != graph.vertex_count()) {
    throw InputError("group degree " + std::to_string(G.degree()) + " != vertex count " +
                         std::to_string(graph.vertex_count()),
                     ErrorCode::degree_mismatch);
  }
  for (const auto& g : G)
    for (auto [u, v] : graph.edges())
      if (!graph.adjacent(g(u), g(v))) return {GraphActionWitness{g, {u, v}}};
  return {};
}

inline std::string describe(const GraphActionWitness& w) {
  return "element " + w.element.to_string() + " maps the edge {" + std::to_string(w.edge.first) + "," +
         std::to_string(w.edge.second) + "} to the non-edge {" + std::to_string(w.element(w.edge.first)) +
         "," + std::to_string(w.element(w.edge.second)) + "}";
}

inline bool is_acyclic(const SimpleGraph& graph, const Orientation& sigma) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    auto [u, v] = graph.edges()[i];
    std::size_t h = sigma.head[i];
    std::size_t t = h == u ? v : u;
    out[t].push_back(h);
    ++indegree[h];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed == n;
}

/// All acyclic orientations, in lexicographic order of the head vectors.
inline std::vector<Orientation> acyclic_orientations(const SimpleGraph& graph,
                                                     std::uint64_t budget = default_budget) {
  require_budget(2, graph.edge_count(), 1, budget, "orientation enumeration");
  std::vector<Orientation> out;
  Orientation sigma;
  sigma.head.resize(graph.edge_count());
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == graph.edge_count()) {
      if (is_acyclic(graph, sigma)) out.push_back(sigma);
      return;
    }
    sigma.head[i] = graph.edges()[i].first;
    walk(i + 1);
    sigma.head[i] = graph.edges()[i].second;
    walk(i + 1);
  };
  walk(0);
  return out;
}

/// Gamma^sigma: v < w iff there is a directed path from v to w.
inline Poset orientation_poset(const SimpleGraph& graph, const Orientation& sigma) {
  std::vector<Relation> arcs;
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    auto [u, v] = graph.edges()[i];
    std::size_t h = sigma.head[i];
    if (h != u && h != v) throw InputError("orientation head is not an endpoint of its edge");
    arcs.emplace_back(h == u ? v : u, h);
  }
  try {
    return poset_from_relations(graph.vertex_count(), arcs);
  } catch (const InputError&) {
    throw InputError("orientation has a directed cycle");
  }
}

namespace detail {

// Edge permutation induced by g: edge i maps to edge result[i].
inline std::vector<std::size_t> edge_images(const SimpleGraph& graph, const Permutation& g) {
  std::vector<std::size_t> out(graph.edge_count());
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    auto [u, v] = graph.edges()[i];
    auto j = graph.edge_index(g(u), g(v));
    if (!j) throw PreconditionError(describe(GraphActionWitness{g, {u, v}}));
    out[i] = *j;
  }
  return out;
}

inline Orientation apply(const Permutation& g, const std::vector<std::size_t>& edge_map,
                         const Orientation& sigma) {
  Orientation out;
  out.head.resize(sigma.head.size());
  for (std::size_t i = 0; i < sigma.head.size(); ++i) out.head[edge_map[i]] = g(sigma.head[i]);
  return out;
}

// Per-element data reused by every enumeration loop.
struct GraphGroup {
  const PermGroup* group;
  std::vector<std::vector<std::size_t>> edge_maps;
  std::vector<int> signs;

  GraphGroup(const SimpleGraph& graph, const PermGroup& G) : group(&G), signs(signs_of(G)) {
    if (auto check = is_graph_action(graph, G); !check) {
      throw PreconditionError("group does not act by graph automorphisms: " + describe(*check.witness));
    }
    for (const auto& g : G) edge_maps.push_back(edge_images(graph, g));
  }
};

inline void for_each_proper(const SimpleGraph& graph, int n,
                            const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t V = graph.vertex_count();
  std::vector<int> c(V, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == V) {
      visit(c);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = !(graph.adjacent(u, v) && c[u] == x);
      if (!ok) continue;
      c[v] = x;
      walk(v + 1);
    }
    c[v] = 0;
  };
  if (n >= 0) walk(0);
}

inline void for_each_coloring(std::size_t V, int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n <= 0) {
    if (V == 0) visit({});
    return;
  }
  std::vector<int> c(V, 1);
  while (true) {
    visit(c);
    std::size_t i = V;
    while (i > 0 && c[i - 1] == n) c[--i] = 1;
    if (i == 0) return;
    ++c[i - 1];
  }
}

inline bool weakly_compatible(const SimpleGraph& graph, const std::vector<int>& c, const Orientation& sigma) {
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    auto [u, v] = graph.edges()[i];
    if (c[u] < c[v] && sigma.head[i] != v) return false;
    if (c[v] < c[u] && sigma.head[i] != u) return false;
  }
  return true;
}

}  // namespace detail

/// (g.sigma)(e) = g.sigma(g^-1 e). Throws PreconditionError if g is not a
/// graph automorphism.
inline Orientation act_on_orientation(const SimpleGraph& graph, const Permutation& g, const Orientation& sigma) {
  return detail::apply(g, detail::edge_images(graph, g), sigma);
}

/// Col_n(Gamma) in lexicographic order.
inline std::vector<LabelMap> proper_colorings(const SimpleGraph& graph, int n) {
  std::vector<LabelMap> out;
  detail::for_each_proper(graph, n, [&](const std::vector<int>& c) {
    LabelMap f;
    f.values = c;
    f.n = n;
    out.push_back(std::move(f));
  });
  return out;
}

inline std::uint64_t count_proper_colorings(const SimpleGraph& graph, int n) {
  std::uint64_t k = 0;
  detail::for_each_proper(graph, n, [&](const std::vector<int>&) { ++k; });
  return k;
}

/// Sigma_n(Gamma): all weakly compatible (coloring, acyclic orientation)
/// pairs, ordered by coloring then orientation.
inline std::vector<CompatiblePair> weakly_compatible_pairs(const SimpleGraph& graph, int n,
                                                           std::uint64_t budget = default_budget) {
  auto sigmas = acyclic_orientations(graph, budget);
  require_budget(static_cast<std::uint64_t>(std::max(n, 0)), graph.vertex_count(), sigmas.size(), budget,
                 "compatible pair enumeration");
  std::vector<CompatiblePair> out;
  detail::for_each_coloring(graph.vertex_count(), n, [&](const std::vector<int>& c) {
    for (const auto& s : sigmas) {
      if (detail::weakly_compatible(graph, c, s)) out.push_back({LabelMap{c, n}, s});
    }
  });
  return out;
}

/// Orbits of proper n-colorings, by canonical representatives. With
/// Parity::even_only this is |Col_{n,+}(Gamma)/G|.
inline std::uint64_t coloring_orbit_count(const SimpleGraph& graph, const PermGroup& G, int n,
                                          std::uint64_t budget = default_budget,
                                          Parity parity = Parity::any) {
  detail::GraphGroup gg(graph, G);
  require_budget(static_cast<std::uint64_t>(std::max(n, 0)), graph.vertex_count(), 1, budget,
                 "coloring enumeration");
  std::uint64_t count = 0;
  detail::for_each_proper(graph, n, [&](const std::vector<int>& c) {
    LabelMap f;
    f.values = c;
    f.n = n;
    auto cls = detail::classify(G, gg.signs, f, act_on_map);
    if (cls.canonical && (parity == Parity::any || cls.even)) ++count;
  });
  return count;
}

inline std::uint64_t even_proper_coloring_orbits(const SimpleGraph& graph, const PermGroup& G, int n,
                                                 std::uint64_t budget = default_budget) {
  return coloring_orbit_count(graph, G, n, budget, Parity::even_only);
}

/// Orbits of Sigma_n(Gamma) under the diagonal action; with
/// Parity::even_only this is |Sigma_{n,+}(Gamma)/G|.
inline std::uint64_t compatible_pair_orbit_count(const SimpleGraph& graph, const PermGroup& G, int n,
                                                 std::uint64_t budget = default_budget,
                                                 Parity parity = Parity::any) {
  detail::GraphGroup gg(graph, G);
  auto pairs = weakly_compatible_pairs(graph, n, budget);
  std::uint64_t count = 0;
  for (const auto& x : pairs) {
    bool canonical = true;
    bool even = true;
    for (std::size_t i = 0; i < G.order() && canonical; ++i) {
      const auto& g = G.elements()[i];
      CompatiblePair y{act_on_map(g, x.coloring), detail::apply(g, gg.edge_maps[i], x.orientation)};
      if (y < x) canonical = false;
      if (y == x && gg.signs[i] < 0) even = false;
    }
    if (canonical && (parity == Parity::any || even)) ++count;
  }
  return count;
}

/// |Sigma_+|: acyclic orientations whose stabilizer holds only sign +1
/// elements (these are the even pairs with the constant 1-coloring).
inline std::uint64_t even_acyclic_orientation_count(const SimpleGraph& graph, const PermGroup& G) {
  detail::GraphGroup gg(graph, G);
  std::uint64_t count = 0;
  for (const auto& s : acyclic_orientations(graph)) {
    bool even = true;
    for (std::size_t i = 0; i < G.order() && even; ++i)
      if (gg.signs[i] < 0 && detail::apply(G.elements()[i], gg.edge_maps[i], s) == s) even = false;
    if (even) ++count;
  }
  return count;
}

/// Number of g-fixed proper n-colorings for every g (indexed like G).
inline std::vector<std::uint64_t> fixed_coloring_counts(const SimpleGraph& graph, const PermGroup& G, int n,
                                                        std::uint64_t budget = default_budget) {
  require_budget(static_cast<std::uint64_t>(std::max(n, 0)), graph.vertex_count(), 1, budget,
                 "coloring enumeration");
  std::vector<std::uint64_t> fix(G.order(), 0);
  detail::for_each_proper(graph, n, [&](const std::vector<int>& c) {
    LabelMap f;
    f.values = c;
    f.n = n;
    for (std::size_t i = 0; i < G.order(); ++i)
      if (fixes_map(G.elements()[i], f)) ++fix[i];
  });
  return fix;
}

/// Burnside route: (1/|G|) sum_g |Col_n(Gamma)^g|.
inline std::uint64_t chromatic_burnside_count(const SimpleGraph& graph, const PermGroup& G, int n,
                                              std::uint64_t budget = default_budget) {
  auto fix = fixed_coloring_counts(graph, G, n, budget);
  std::size_t i = 0;
  return burnside_count(G, [&](const Permutation&) { return fix[i++]; });
}

struct ChromaticResult : OrbitalResult {
  std::optional<RationalPolynomial> oracle_polynomial;  // interpolated Burnside counts
};

/// chi_{Gamma,G}(n) = (1/|G|) sum_g sum_{sigma in Sigma^g} Omega°_{(Gamma^sigma)_g}(n).
/// With opt.oracle the Burnside-interpolated polynomial is also computed and
/// (with opt.enforce) required to match coefficientwise.
inline ChromaticResult orbital_chromatic_polynomial(const SimpleGraph& graph, const PermGroup& G,
                                                    const OrbitalOptions& opt = {}) {
  detail::GraphGroup gg(graph, G);
  const auto sigmas = acyclic_orientations(graph, opt.budget);
  ChromaticResult r;
  const Rational weight(1, G.order());
  std::vector<WeightedTerm> terms;
  for (std::size_t i = 0; i < G.order(); ++i) {
    const auto& g = G.elements()[i];
    ElementSummary s{g, cycle_count(g), {}, 0};
    for (const auto& sigma : sigmas) {
      if (!(detail::apply(g, gg.edge_maps[i], sigma) == sigma)) continue;
      ++s.fixed_orientations;
      Poset P = orientation_poset(graph, sigma);
      if (!is_order_automorphism(P, g)) {
        throw ConsistencyError("g fixes an orientation but is not an automorphism of its poset");
      }
      s.polynomial += order_polynomial(quotient_poset(P, g).poset, true);
    }
    terms.push_back({weight, s.polynomial});
    r.per_group_element.push_back(std::move(s));
  }
  r.polynomial = scale_add(terms);
  detail::check_orbital_degree(r.polynomial, graph.vertex_count(), "orbital chromatic polynomial");

  const int rows = opt.max_n > 0 ? opt.max_n : static_cast<int>(graph.vertex_count()) + 1;
  if (opt.oracle) {
    std::vector<SamplePoint> pts;
    for (int n = 1; n <= static_cast<int>(graph.vertex_count()) + 1; ++n) {
      pts.push_back({n, Rational(chromatic_burnside_count(graph, G, n, opt.budget))});
    }
    r.oracle_polynomial = interpolate(pts);
    if (opt.enforce && !(*r.oracle_polynomial == r.polynomial)) {
      throw ConsistencyError("orientation formula and Burnside interpolant differ");
    }
  }
  for (int n = 1; n <= rows; ++n) {
    ValueRow row{n, r.polynomial(Rational(n)), std::nullopt};
    if (opt.oracle) row.oracle = chromatic_burnside_count(graph, G, n, opt.budget);
    r.value_table.push_back(std::move(row));
  }
  detail::enforce_table(r, opt);
  return r;
}

/// chi+_{Gamma,G}: interpolation of |Col_{n,+}(Gamma)/G| at n = 1..|V|+1,
/// checked to have degree |V|.
inline RationalPolynomial even_chromatic_polynomial(const SimpleGraph& graph, const PermGroup& G,
                                                    std::uint64_t budget = default_budget) {
  std::vector<SamplePoint> pts;
  for (int n = 1; n <= static_cast<int>(graph.vertex_count()) + 1; ++n) {
    pts.push_back({n, Rational(even_proper_coloring_orbits(graph, G, n, budget))});
  }
  auto p = interpolate(pts);
  detail::check_orbital_degree(p, graph.vertex_count(), "even orbital chromatic polynomial");
  return p;
}

struct GraphReciprocityRow {
  int n = 0;
  Rational chi_at_minus_n;         // chi_{Gamma,G}(-n)
  Rational even_pair_orbits;       // (-1)^|V| |Sigma_{n,+}/G|
  Rational even_chi_at_minus_n;    // chi+_{Gamma,G}(-n)
  Rational pair_orbits;            // (-1)^|V| |Sigma_n/G|

  bool chi_holds() const { return chi_at_minus_n == even_pair_orbits; }
  bool twin_holds() const { return even_chi_at_minus_n == pair_orbits; }
};

struct GraphReciprocityReport {
  RationalPolynomial chi;
  RationalPolynomial even_chi;
  std::vector<GraphReciprocityRow> rows;

  bool passed() const {
    for (const auto& r : rows)
      if (!r.chi_holds() || !r.twin_holds()) return false;
    return true;
  }
};

/// Checks chi(-n) = (-1)^|V| |Sigma_{n,+}/G| and
/// chi+(-n) = (-1)^|V| |Sigma_n/G| for n = 1..n_max.
inline GraphReciprocityReport verify_graph_reciprocity(const SimpleGraph& graph, const PermGroup& G, int n_max,
                                                       std::uint64_t budget = default_budget) {
  OrbitalOptions opt;
  opt.oracle = false;
  opt.budget = budget;
  GraphReciprocityReport rep;
  rep.chi = orbital_chromatic_polynomial(graph, G, opt).polynomial;
  rep.even_chi = even_chromatic_polynomial(graph, G, budget);
  const Rational parity = graph.vertex_count() % 2 == 0 ? 1 : -1;
  for (int n = 1; n <= n_max; ++n) {
    GraphReciprocityRow row;
    row.n = n;
    row.chi_at_minus_n = rep.chi(Rational(-n));
    row.even_chi_at_minus_n = rep.even_chi(Rational(-n));
    row.even_pair_orbits = parity * Rational(compatible_pair_orbit_count(graph, G, n, budget, Parity::even_only));
    row.pair_orbits = parity * Rational(compatible_pair_orbit_count(graph, G, n, budget));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace orbital
