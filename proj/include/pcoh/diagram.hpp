#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "pcoh/simplex_tree.hpp"

namespace pcoh {

struct persistence_pair {
  int dim;
  filtration_value birth;
  filtration_value death;  // +inf for essential classes
  simplex_handle creator;
  std::optional<simplex_handle> killer;

  bool essential() const { return !killer.has_value(); }
};

/// A diagram point without the simplex pairing.
struct diagram_point {
  int dim;
  filtration_value birth;
  filtration_value death;

  friend auto operator<=>(const diagram_point&, const diagram_point&) = default;
};

struct persistence_diagram {
  std::vector<persistence_pair> pairs;

  /// Points sorted by (dim, birth, death).
  std::vector<diagram_point> points() const;
  std::size_t essential_count(int dim) const;
};

/// Multiset equality of (dim, birth, death); creators and killers are ignored.
bool diagram_equal(const persistence_diagram& a, const persistence_diagram& b);

/// Points of `a` not matched in `b`, as a multiset difference.
std::vector<diagram_point> diagram_difference(const persistence_diagram& a,
                                              const persistence_diagram& b);

/// Removes pairs with birth == death.
void drop_zero_length(persistence_diagram& d);

}  // namespace pcoh
