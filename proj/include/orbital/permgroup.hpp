#pragma once

/**
 * @file permgroup.hpp
 * @brief Permutations of {0, ..., m-1}, finite groups given by their full
 * element list, cycles, signs, orbits, stabilizers and Burnside counting.
 *
 * Composition follows the function convention: compose(g, h)(x) = g(h(x)).
 * With that convention the induced action (g.f)(x) = f(g^-1 x) on maps is a
 * left action.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "orbital/errors.hpp"
#include "orbital/label_map.hpp"
#include "orbital/polynomial.hpp"

namespace orbital {

class Permutation {
 public:
  Permutation() = default;

  // Throws InputError unless images is a bijection on {0, ..., size-1}.
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (std::size_t y : images_) {
      if (y >= images_.size() || hit[y]) {
        throw InputError("not a bijection on {0.." + std::to_string(images_.size()) + "-1}",
                         ErrorCode::malformed_input);
      }
      hit[y] = true;
    }
  }

  static Permutation identity(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
  }

  // Each inner vector is one cycle (a0 a1 ... ak): a0 -> a1 -> ... -> ak -> a0.
  // Points not mentioned are fixed.
  static Permutation from_cycles(std::size_t m, const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), std::size_t{0});
    std::vector<bool> used(m, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        std::size_t a = cyc[i];
        if (a >= m || used[a]) {
          throw InputError("bad cycle entry " + std::to_string(a), ErrorCode::malformed_input);
        }
        used[a] = true;
        v[a] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(v));
  }

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_[x]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
  }

  // Cycle notation over 0-based indices, fixed points omitted; "()" for e.
  std::string to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == s) continue;
      out += "(";
      for (std::size_t x = s; !seen[x]; x = images_[x]) {
        if (x != s) out += " ";
        out += std::to_string(x);
        seen[x] = true;
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation&, const Permutation&);
  std::vector<std::size_t> images_;
};

/// (g o h)(x) = g(h(x)).
inline Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) {
    throw InputError("composing permutations of degree " + std::to_string(g.degree()) + " and " +
                         std::to_string(h.degree()),
                     ErrorCode::degree_mismatch);
  }
  Permutation r;
  r.images_.resize(g.degree());
  for (std::size_t x = 0; x < g.degree(); ++x) r.images_[x] = g.images_[h.images_[x]];
  return r;
}

// A partition of an indexed set into blocks. Blocks are sorted internally and
// ordered by their minimum element, which is the block representative.
struct OrbitPartition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t count() const { return blocks.size(); }
  std::size_t representative(std::size_t b) const { return blocks[b].front(); }

  // block index of every point
  std::vector<std::size_t> block_of(std::size_t ground_size) const {
    std::vector<std::size_t> out(ground_size);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t x : blocks[b]) out[x] = b;
    return out;
  }
};

inline OrbitPartition cycles(const Permutation& g) {
  OrbitPartition part;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t s = 0; s < g.degree(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> block;
    for (std::size_t x = s; !seen[x]; x = g(x)) {
      seen[x] = true;
      block.push_back(x);
    }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

inline std::size_t cycle_count(const Permutation& g) { return cycles(g).count(); }

/// Sign as a permutation: (-1)^(m + c(g)).
inline int sign(const Permutation& g) {
  return (g.degree() + cycle_count(g)) % 2 == 0 ? 1 : -1;
}

class PermGroup {
 public:
  // The trivial group on m points.
  explicit PermGroup(std::size_t m = 0) : degree_(m), elements_{Permutation::identity(m)} {}

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  friend PermGroup closure(const std::vector<Permutation>&, std::size_t);
  friend PermGroup subgroup_from_elements(const PermGroup&, std::vector<Permutation>);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;  // sorted; identity is first
  std::vector<Permutation> generators_;
};

/// Smallest group containing the generators, by breadth-first multiplication.
inline PermGroup closure(const std::vector<Permutation>& generators, std::size_t m) {
  for (const auto& s : generators) {
    if (s.degree() != m) {
      throw InputError("generator " + s.to_string() + " has degree " + std::to_string(s.degree()) +
                           ", expected " + std::to_string(m),
                       ErrorCode::degree_mismatch);
    }
  }
  PermGroup G(m);
  std::set<Permutation> seen{Permutation::identity(m)};
  std::deque<Permutation> frontier{Permutation::identity(m)};
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Permutation y = compose(s, x);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  G.elements_.assign(seen.begin(), seen.end());
  for (const auto& s : generators)
    if (!s.is_identity()) G.generators_.push_back(s);
  return G;
}

// Wraps an element list already known to be a subgroup of `parent`. A small
// generating set is picked greedily and the closure is compared against the
// list, so a non-subgroup is reported rather than silently accepted.
inline PermGroup subgroup_from_elements(const PermGroup& parent, std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<Permutation> gens;
  PermGroup H(parent.degree());
  for (const auto& x : elems) {
    if (H.contains(x)) continue;
    gens.push_back(x);
    H = closure(gens, parent.degree());
  }
  if (H.elements_ != elems) throw ConsistencyError("element list is not closed under composition");
  return H;
}

/// Orbits of G acting on an explicit finite set. `points` must be sorted and
/// duplicate-free; `act(g, p)` must return a member of `points`. The identity
/// and compatibility laws are checked against the stored generators.
template <class T, class Action>
OrbitPartition orbits(const PermGroup& G, const std::vector<T>& points, Action act) {
  auto index_of = [&](const T& p) {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || !(*it == p)) {
      throw InputError("action leaves the point set", ErrorCode::invalid_action);
    }
    return static_cast<std::size_t>(it - points.begin());
  };
  OrbitPartition part;
  std::vector<bool> seen(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (seen[i]) continue;
    if (!(act(G.elements().front(), points[i]) == points[i])) {
      throw InputError("identity does not fix every point", ErrorCode::invalid_action);
    }
    std::vector<std::size_t> block;
    for (const auto& g : G) {
      T image = act(g, points[i]);
      for (const auto& s : G.generators()) {
        if (!(act(s, image) == act(compose(s, g), points[i]))) {
          throw InputError("action is not compatible with composition", ErrorCode::invalid_action);
        }
      }
      std::size_t j = index_of(image);
      if (!seen[j]) {
        seen[j] = true;
        block.push_back(j);
      }
    }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

/// Orbits on the ground set {0, ..., m-1} itself.
inline OrbitPartition orbits(const PermGroup& G) {
  std::vector<std::size_t> pts(G.degree());
  std::iota(pts.begin(), pts.end(), std::size_t{0});
  return orbits(G, pts, [](const Permutation& g, std::size_t x) { return g(x); });
}

/// (g.f)(x) = f(g^-1 x).
inline LabelMap act_on_map(const Permutation& g, const LabelMap& f) {
  LabelMap out;
  out.n = f.n;
  out.values.resize(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out.values[g(x)] = f.values[x];
  return out;
}

// True iff g.f == f, i.e. f is constant on the cycles of g.
inline bool fixes_map(const Permutation& g, const LabelMap& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f.values[g(x)] != f.values[x]) return false;
  return true;
}

inline PermGroup stabilizer(const PermGroup& G, const LabelMap& f) {
  std::vector<Permutation> keep;
  for (const auto& g : G)
    if (fixes_map(g, f)) keep.push_back(g);
  return subgroup_from_elements(G, std::move(keep));
}

/// Burnside average (1/|G|) sum_g fix(g). A non-integral average means the
/// counts did not come from a group action and raises ConsistencyError.
template <class FixCounter>
std::uint64_t burnside_count(const PermGroup& G, FixCounter&& fix_counter) {
  Integer total = 0;
  for (const auto& g : G) total += Integer(fix_counter(g));
  if (total % G.order() != 0) {
    throw ConsistencyError("Burnside average " + total.str() + "/" + std::to_string(G.order()) +
                           " is not an integer");
  }
  return static_cast<std::uint64_t>(total / G.order());
}

}  // namespace orbital
