#pragma once

// Shared (poset, group) and (graph, group) fixtures plus seeded random
// instance generators.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "orbital/graph.hpp"
#include "orbital/permgroup.hpp"
#include "orbital/poset.hpp"

namespace fixtures {

using orbital::Edge;
using orbital::Permutation;
using orbital::PermGroup;
using orbital::Poset;
using orbital::Relation;
using orbital::SimpleGraph;
using Cycles = std::vector<std::vector<std::size_t>>;

inline Permutation perm(std::size_t m, const Cycles& c) { return Permutation::from_cycles(m, c); }

inline PermGroup group(std::size_t m, const std::vector<Cycles>& gens) {
  std::vector<Permutation> g;
  for (const auto& c : gens) g.push_back(perm(m, c));
  return orbital::closure(g, m);
}

inline PermGroup symmetric(std::size_t m) {
  if (m < 2) return PermGroup(m);
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return group(m, {{{0, 1}}, {all}});
}

struct PosetCase {
  std::string name;
  Poset poset;
  PermGroup group;
};

struct GraphCase {
  std::string name;
  SimpleGraph graph;
  PermGroup group;
};

inline std::vector<PosetCase> poset_cases() {
  using orbital::antichain;
  using orbital::chain;
  using orbital::poset_from_relations;
  const Poset two_chains = poset_from_relations(4, {{0, 2}, {1, 3}});
  const Poset diamond = poset_from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const Poset claw = poset_from_relations(4, {{0, 1}, {0, 2}, {0, 3}});
  const Poset k22 = poset_from_relations(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  return {
      {"antichain1/S1", antichain(1), PermGroup(1)},
      {"antichain2/S2", antichain(2), symmetric(2)},
      {"antichain3/S3", antichain(3), symmetric(3)},
      {"antichain3/C3", antichain(3), group(3, {{{0, 1, 2}}})},
      {"antichain4/S4", antichain(4), symmetric(4)},
      {"antichain4/C4", antichain(4), group(4, {{{0, 1, 2, 3}}})},
      {"antichain4/(01)(23)", antichain(4), group(4, {{{0, 1}, {2, 3}}})},
      {"antichain5/D5", antichain(5), group(5, {{{0, 1, 2, 3, 4}}, {{1, 4}, {2, 3}}})},
      {"antichain5/S3xS2", antichain(5), group(5, {{{0, 1}}, {{0, 1, 2}}, {{3, 4}}})},
      {"chain3/trivial", chain(3), PermGroup(3)},
      {"chain5/trivial", chain(5), PermGroup(5)},
      {"two-chains/swap", two_chains, group(4, {{{0, 1}, {2, 3}}})},
      {"V/swap", poset_from_relations(3, {{0, 1}, {0, 2}}), group(3, {{{1, 2}}})},
      {"Lambda/swap", poset_from_relations(3, {{0, 2}, {1, 2}}), group(3, {{{0, 1}}})},
      {"diamond/swap", diamond, group(4, {{{1, 2}}})},
      {"claw/S3", claw, group(4, {{{1, 2}}, {{1, 2, 3}}})},
      {"claw/C3", claw, group(4, {{{1, 2, 3}}})},
      {"co-claw/S3", poset_from_relations(4, {{0, 3}, {1, 3}, {2, 3}}), group(4, {{{0, 1}}, {{0, 1, 2}}})},
      {"K22/S2xS2", k22, group(4, {{{0, 1}}, {{2, 3}}})},
      {"K22/diagonal", k22, group(4, {{{0, 1}, {2, 3}}})},
      {"two-chains-top/swap", poset_from_relations(5, {{0, 2}, {1, 3}, {2, 4}, {3, 4}}),
       group(5, {{{0, 1}, {2, 3}}})},
      {"two-chains+point/swap", poset_from_relations(5, {{0, 1}, {2, 3}}), group(5, {{{0, 2}, {1, 3}}})},
      {"diamond-top/swap", poset_from_relations(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}),
       group(5, {{{1, 2}}})},
      {"chain2+antichain2/swap", poset_from_relations(4, {{0, 1}}), group(4, {{{2, 3}}})},
      {"star4/C4", poset_from_relations(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), group(5, {{{1, 2, 3, 4}}})},
  };
}

inline std::vector<GraphCase> graph_cases() {
  const SimpleGraph edge(2, {{0, 1}});
  const SimpleGraph triangle = orbital::cycle_graph(3);
  const SimpleGraph c4 = orbital::cycle_graph(4);
  const SimpleGraph c5 = orbital::cycle_graph(5);
  const SimpleGraph two_edges(4, {{0, 1}, {2, 3}});
  return {
      {"edge/trivial", edge, PermGroup(2)},
      {"edge/swap", edge, group(2, {{{0, 1}}})},
      {"triangle/trivial", triangle, PermGroup(3)},
      {"triangle/C3", triangle, group(3, {{{0, 1, 2}}})},
      {"triangle/D3", triangle, group(3, {{{0, 1, 2}}, {{1, 2}}})},
      {"path3/flip", SimpleGraph(3, {{0, 1}, {1, 2}}), group(3, {{{0, 2}}})},
      {"C4/C4", c4, group(4, {{{0, 1, 2, 3}}})},
      {"C4/D4", c4, group(4, {{{0, 1, 2, 3}}, {{1, 3}}})},
      {"C4/(02)(13)", c4, group(4, {{{0, 2}, {1, 3}}})},
      {"C5/C5", c5, group(5, {{{0, 1, 2, 3, 4}}})},
      {"C5/D5", c5, group(5, {{{0, 1, 2, 3, 4}}, {{1, 4}, {2, 3}}})},
      {"K4/S4", orbital::complete_graph(4), symmetric(4)},
      {"star3/S3", SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}}), group(4, {{{1, 2}}, {{1, 2, 3}}})},
      {"edgeless3/S3", SimpleGraph(3, {}), symmetric(3)},
      {"path4/flip", SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}}), group(4, {{{0, 3}, {1, 2}}})},
      {"two-edges/swap", two_edges, group(4, {{{0, 2}, {1, 3}}})},
      {"two-edges/order8", two_edges, group(4, {{{0, 1}}, {{0, 2}, {1, 3}}})},
      {"K23/S2xS3", SimpleGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}),
       group(5, {{{0, 1}}, {{2, 3}}, {{2, 3, 4}}})},
      {"paw/swap", SimpleGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), group(4, {{{0, 1}}})},
  };
}

inline Permutation random_perm(std::size_t m, std::mt19937& rng) {
  std::vector<std::size_t> v(m);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

// A random poset on k elements: a random DAG over a shuffled labeling, each
// forward pair kept with probability `density`.
inline Poset random_poset(std::size_t k, std::mt19937& rng, double density = 0.4) {
  auto order = random_perm(k, rng);
  std::bernoulli_distribution keep(density);
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (keep(rng)) rel.emplace_back(order(i), order(j));
  return orbital::poset_from_relations(k, rel);
}

inline orbital::LabelMap random_map(std::size_t m, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(1, n);
  std::vector<int> v(m);
  for (auto& x : v) x = d(rng);
  return orbital::LabelMap(std::move(v), n);
}

}  // namespace fixtures
