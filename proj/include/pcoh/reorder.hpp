#pragma once

#include <cstddef>
#include <vector>

#include "pcoh/simplex_tree.hpp"

namespace pcoh {

/// Simplices sharing one filtration value, listed in an order that respects
/// inclusion. Every face of a slab simplex is either earlier in the
/// filtration or in the slab.
struct iso_slab {
  filtration_value value;
  std::vector<simplex_handle> simplices;
};

/// Hasse-diagram edges walked by reorder_slab, per direction.
struct traversal_counters {
  std::size_t up_edges = 0;
  std::size_t down_edges = 0;
};

/// Consecutive equal-value runs of c.filtration_order().
std::vector<iso_slab> slab_partition(const filtered_complex& c);

/// Reorders one slab so that holes get filled soon after they open: for each
/// slab simplex, an upward depth-first walk collects its inclusion-maximal
/// cofaces inside the slab, then a downward depth-first walk from each of
/// them emits every not-yet-emitted subface before its cofaces.
///
/// Throws slab_not_relatively_closed if a slab simplex has a different value
/// or a face of the same value that is missing from the slab.
std::vector<simplex_handle> reorder_slab(const filtered_complex& c, const iso_slab& slab,
                                         traversal_counters* counters = nullptr);

/// Concatenation of reorder_slab over slab_partition(c).
std::vector<simplex_handle> reordered_filtration(const filtered_complex& c);

}  // namespace pcoh
