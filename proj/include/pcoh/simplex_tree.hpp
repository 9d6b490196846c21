#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pcoh {

using vertex_id = std::uint32_t;
using simplex_handle = std::uint32_t;
using filtration_value = double;

inline constexpr simplex_handle null_simplex = std::numeric_limits<simplex_handle>::max();
inline constexpr filtration_value infinite_value = std::numeric_limits<double>::infinity();

struct signed_face {
  simplex_handle face;
  int sign;  // +1 or -1
};

/// Closed interval of filtration values.
struct value_range {
  filtration_value lo = -infinite_value;
  filtration_value hi = infinite_value;

  bool contains(filtration_value v) const { return lo <= v && v <= hi; }
  static value_range all() { return {}; }
  static value_range exactly(filtration_value v) { return {v, v}; }
};

/// A filtered simplicial complex stored as a simplex tree: every simplex is
/// the path of its sorted vertex labels from the root. The Hasse diagram is
/// never stored; its edges are walked through boundary() and
/// codim1_cofaces().
///
/// The complex is mutable until finalize(), which validates closure and
/// monotonicity and freezes it. After that, handles are stable and the
/// object is safe for concurrent reads.
class filtered_complex {
 public:
  filtered_complex() = default;

  /// Inserts the simplex with the given vertices (any order, no duplicates).
  /// Re-insertion keeps the minimum of the old and new values. Faces are not
  /// created.
  simplex_handle insert_simplex(std::span<const vertex_id> vertices, filtration_value value);
  simplex_handle insert_simplex(std::initializer_list<vertex_id> vertices, filtration_value value) {
    return insert_simplex(std::span<const vertex_id>(vertices.begin(), vertices.size()), value);
  }

  /// Throws closure_violation or monotonicity_violation naming the offending pair.
  void finalize();
  bool finalized() const { return finalized_; }

  std::optional<simplex_handle> find(std::span<const vertex_id> vertices) const;
  std::optional<simplex_handle> find(std::initializer_list<vertex_id> vertices) const {
    return find(std::span<const vertex_id>(vertices.begin(), vertices.size()));
  }
  /// Like find(), but throws unknown_simplex.
  simplex_handle handle(std::span<const vertex_id> vertices) const;
  simplex_handle handle(std::initializer_list<vertex_id> vertices) const {
    return handle(std::span<const vertex_id>(vertices.begin(), vertices.size()));
  }

  std::vector<vertex_id> vertices(simplex_handle s) const;
  int dimension(simplex_handle s) const { return node_at(s).dim; }
  filtration_value filtration(simplex_handle s) const { return node_at(s).value; }

  /// The dim+1 codimension-1 faces; the j-th face omits the j-th vertex and
  /// carries sign (-1)^j. Empty for vertices. Requires finalize().
  std::vector<signed_face> boundary(simplex_handle s) const;
  std::vector<signed_face> boundary(std::span<const vertex_id> vertices) const {
    return boundary(handle(vertices));
  }

  /// Cofaces of dimension dim(s)+1 whose value lies in `slab`, in
  /// lexicographic order of vertex lists. Requires finalize().
  std::vector<simplex_handle> codim1_cofaces(simplex_handle s,
                                             value_range slab = value_range::all()) const;

  /// Sorted by (value, dimension, lexicographic vertex list). Requires finalize().
  const std::vector<simplex_handle>& filtration_order() const;
  /// Index of s in filtration_order().
  std::size_t position(simplex_handle s) const;

  /// Number of simplices (present ones only).
  std::size_t size() const { return present_count_; }
  bool empty() const { return present_count_ == 0; }
  /// Highest simplex dimension, -1 for the empty complex.
  int dimension() const { return max_dim_; }
  std::size_t count(int dim) const;

  /// All present simplices, in no particular order (works before finalize).
  std::vector<simplex_handle> simplices() const;

 private:
  struct node {
    vertex_id label;
    simplex_handle parent;
    filtration_value value;
    int dim;
    bool present;
    std::vector<std::pair<vertex_id, simplex_handle>> children;  // sorted by label
  };

  const node& node_at(simplex_handle s) const;
  simplex_handle child(simplex_handle parent, vertex_id label) const;
  std::optional<simplex_handle> find_sorted(std::span<const vertex_id> sorted) const;
  std::span<const vertex_id> cached_vertices(simplex_handle s) const;
  void require_finalized(const char* what) const;

  std::vector<node> nodes_;
  std::vector<std::pair<vertex_id, simplex_handle>> roots_;  // vertices, sorted
  std::size_t present_count_ = 0;
  int max_dim_ = -1;
  bool finalized_ = false;

  // built by finalize()
  std::vector<std::uint32_t> vertex_offset_;  // node -> start in vertex_pool_
  std::vector<vertex_id> vertex_pool_;
  std::vector<std::vector<vertex_id>> neighbors_;  // 1-skeleton adjacency, sorted
  std::vector<simplex_handle> order_;
  std::vector<std::uint32_t> position_;
  std::vector<std::size_t> count_by_dim_;
};

}  // namespace pcoh
