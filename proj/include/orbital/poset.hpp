#pragma once

/**
 * @file poset.hpp
 * @brief Finite posets, automorphism checks, quotient posets by a cyclic
 * group, and enumeration of (strictly) order preserving maps into chains.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbital/errors.hpp"
#include "orbital/label_map.hpp"
#include "orbital/permgroup.hpp"
#include "orbital/polynomial.hpp"

namespace orbital {

using Relation = std::pair<std::size_t, std::size_t>;

// A finite strict partial order on {0, ..., size-1}. The relation is stored
// transitively closed as a dense matrix so comparisons are O(1).
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return size_; }
  bool less(std::size_t p, std::size_t q) const { return less_[p * size_ + q]; }
  bool comparable(std::size_t p, std::size_t q) const { return less(p, q) || less(q, p); }

  // All pairs (p, q) with p < q in the order, sorted.
  std::vector<Relation> relations() const {
    std::vector<Relation> out;
    for (std::size_t p = 0; p < size_; ++p)
      for (std::size_t q = 0; q < size_; ++q)
        if (less(p, q)) out.emplace_back(p, q);
    return out;
  }

  bool is_antichain() const { return std::none_of(less_.begin(), less_.end(), [](char c) { return c; }); }

  // Elements in an order compatible with the partial order (smallest index
  // first among the available minimal elements).
  const std::vector<std::size_t>& linear_extension() const { return extension_; }

  // Strict predecessors of each element.
  const std::vector<std::size_t>& below(std::size_t q) const { return below_[q]; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.size_ == b.size_ && a.less_ == b.less_;
  }

 private:
  friend Poset poset_from_relations(std::size_t, const std::vector<Relation>&);

  std::size_t size_ = 0;
  std::vector<char> less_;
  std::vector<std::size_t> extension_;
  std::vector<std::vector<std::size_t>> below_;
};

/// Transitive closure of the given relation. Throws InputError
/// "not a partial order" when the closure contains a cycle.
inline Poset poset_from_relations(std::size_t size, const std::vector<Relation>& relations) {
  Poset P;
  P.size_ = size;
  P.less_.assign(size * size, 0);
  for (auto [p, q] : relations) {
    if (p >= size || q >= size) {
      throw InputError("relation (" + std::to_string(p) + "," + std::to_string(q) +
                       ") outside a poset of size " + std::to_string(size));
    }
    P.less_[p * size + q] = 1;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (P.less_[i * size + k])
        for (std::size_t j = 0; j < size; ++j)
          if (P.less_[k * size + j]) P.less_[i * size + j] = 1;
  for (std::size_t i = 0; i < size; ++i) {
    if (P.less_[i * size + i]) {
      throw InputError("not a partial order: element " + std::to_string(i) + " lies on a cycle");
    }
  }
  P.below_.assign(size, {});
  for (std::size_t q = 0; q < size; ++q)
    for (std::size_t p = 0; p < size; ++p)
      if (P.less_[p * size + q]) P.below_[q].push_back(p);

  std::vector<bool> placed(size, false);
  while (P.extension_.size() < size) {
    for (std::size_t q = 0; q < size; ++q) {
      if (placed[q]) continue;
      bool ready = std::all_of(P.below_[q].begin(), P.below_[q].end(),
                               [&](std::size_t p) { return placed[p]; });
      if (ready) {
        placed[q] = true;
        P.extension_.push_back(q);
        break;
      }
    }
  }
  return P;
}

inline Poset chain(std::size_t k) {
  std::vector<Relation> rel;
  for (std::size_t i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
  return poset_from_relations(k, rel);
}

inline Poset antichain(std::size_t k) { return poset_from_relations(k, {}); }

struct ActionWitness {
  Permutation element;
  std::size_t p;
  std::size_t q;
};

// ok() iff every element maps every related pair to a related pair. On
// failure the first offending (g, p, q) with p < q but not g(p) < g(q).
struct ActionCheck {
  std::optional<ActionWitness> witness;
  bool ok() const { return !witness.has_value(); }
  explicit operator bool() const { return ok(); }
};

inline ActionCheck is_order_automorphism(const Poset& P, const Permutation& g) {
  if (g.degree() != P.size()) {
    throw InputError("permutation degree " + std::to_string(g.degree()) + " != poset size " +
                         std::to_string(P.size()),
                     ErrorCode::degree_mismatch);
  }
  for (auto [p, q] : P.relations())
    if (!P.less(g(p), g(q))) return {ActionWitness{g, p, q}};
  return {};
}

inline ActionCheck is_order_action(const Poset& P, const PermGroup& G) {
  for (const auto& g : G) {
    auto check = is_order_automorphism(P, g);
    if (!check) return check;
  }
  return {};
}

inline std::string describe(const ActionWitness& w) {
  return "element " + w.element.to_string() + " maps the relation " + std::to_string(w.p) + " < " +
         std::to_string(w.q) + " to the non-relation " + std::to_string(w.element(w.p)) + " < " +
         std::to_string(w.element(w.q));
}

struct QuotientPoset {
  Poset poset;
  OrbitPartition blocks;               // the cycles of g, ordered by minimum
  std::vector<std::size_t> block_of;   // element -> block index
};

/// P_g: the cycles of g, with [x] < [y] iff some x' in [x], y' in [y] have
/// x' < y'. Requires g to be an automorphism of P.
inline QuotientPoset quotient_poset(const Poset& P, const Permutation& g) {
  if (auto check = is_order_automorphism(P, g); !check) {
    throw PreconditionError("quotient by a non-automorphism: " + describe(*check.witness));
  }
  QuotientPoset Q;
  Q.blocks = cycles(g);
  Q.block_of = Q.blocks.block_of(P.size());
  for (const auto& block : Q.blocks.blocks)
    for (std::size_t a : block)
      for (std::size_t b : block)
        if (P.less(a, b)) throw ConsistencyError("cycle of " + g.to_string() + " is not an antichain");

  std::vector<Relation> rel;
  for (auto [p, q] : P.relations()) rel.emplace_back(Q.block_of[p], Q.block_of[q]);
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  try {
    Q.poset = poset_from_relations(Q.blocks.count(), rel);
  } catch (const InputError& e) {
    throw ConsistencyError(std::string("quotient relation is not a partial order: ") + e.what());
  }
  return Q;
}

namespace detail {

inline void hom_walk(const Poset& P, int n, bool strict, std::size_t depth, std::vector<int>& values,
                     const std::function<void(const std::vector<int>&)>& visit) {
  const auto& ext = P.linear_extension();
  if (depth == ext.size()) {
    visit(values);
    return;
  }
  std::size_t q = ext[depth];
  int lo = 1;
  for (std::size_t p : P.below(q)) lo = std::max(lo, values[p] + (strict ? 1 : 0));
  for (int v = lo; v <= n; ++v) {
    values[q] = v;
    hom_walk(P, n, strict, depth + 1, values, visit);
  }
  values[q] = 0;
}

inline std::uint64_t hom_count(const Poset& P, int n, bool strict, std::size_t depth,
                               std::vector<int>& values) {
  const auto& ext = P.linear_extension();
  if (depth == ext.size()) return 1;
  std::size_t q = ext[depth];
  int lo = 1;
  for (std::size_t p : P.below(q)) lo = std::max(lo, values[p] + (strict ? 1 : 0));
  std::uint64_t total = 0;
  for (int v = lo; v <= n; ++v) {
    values[q] = v;
    total += hom_count(P, n, strict, depth + 1, values);
  }
  values[q] = 0;
  return total;
}

}  // namespace detail

/// Calls visit(values) once per order preserving map P -> [n] (strictly
/// order preserving when `strict`). Visiting order follows the linear
/// extension and is not lexicographic.
inline void for_each_hom(const Poset& P, int n, bool strict,
                         const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> values(P.size(), 0);
  if (n < 0) return;
  detail::hom_walk(P, n, strict, 0, values, visit);
}

inline std::uint64_t count_homs(const Poset& P, int n, bool strict) {
  if (n < 0) return 0;
  std::vector<int> values(P.size(), 0);
  return detail::hom_count(P, n, strict, 0, values);
}

/// Hom(P,[n]) or Hom°(P,[n]) in lexicographic order.
inline std::vector<LabelMap> enumerate_homs(const Poset& P, int n, bool strict) {
  std::vector<LabelMap> out;
  for_each_hom(P, n, strict, [&](const std::vector<int>& v) {
    LabelMap f;
    f.values = v;
    f.n = n;
    out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Interpolates hom counts at n = 1, ..., node_count. The default
/// node_count |P| + 1 determines the polynomial; the result must have degree
/// exactly |P| (the empty poset gives the constant 1).
inline RationalPolynomial order_polynomial(const Poset& P, bool strict, std::size_t node_count = 0) {
  if (node_count == 0) node_count = P.size() + 1;
  std::vector<SamplePoint> pts;
  for (std::size_t n = 1; n <= node_count; ++n) {
    pts.push_back({static_cast<std::int64_t>(n), Rational(count_homs(P, static_cast<int>(n), strict))});
  }
  RationalPolynomial poly = interpolate(pts);
  if (poly.degree() != static_cast<int>(P.size())) {
    throw ConsistencyError("order polynomial of a " + std::to_string(P.size()) +
                           "-element poset has degree " + std::to_string(poly.degree()));
  }
  return poly;
}

}  // namespace orbital
