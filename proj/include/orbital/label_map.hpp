#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "orbital/errors.hpp"

namespace orbital {

// A map from a 0-indexed ground set into the chain {1 < ... < n}. Used both
// for order preserving maps and for colorings.
struct LabelMap {
  std::vector<int> values;
  int n = 0;

  LabelMap() = default;
  LabelMap(std::vector<int> v, int chain_size) : values(std::move(v)), n(chain_size) {
    for (int x : values) {
      if (x < 1 || x > n) {
        throw InputError("label " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
      }
    }
  }

  std::size_t size() const { return values.size(); }
  int operator[](std::size_t i) const { return values[i]; }

  friend auto operator<=>(const LabelMap&, const LabelMap&) = default;
  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

}  // namespace orbital
