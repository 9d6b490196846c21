#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "pcoh/annotation.hpp"
#include "pcoh/prime_field.hpp"

namespace pcoh {

/// Identifies a p-simplex inside the matrix of dimension p.
using slot_id = std::uint32_t;

/// Compressed annotation matrix for one dimension p.
///
/// Distinct nonzero columns live once in a hash set (AV); simplices sharing
/// a column are grouped in a union-find forest (UF) whose roots point at
/// their column. Every nonzero entry is also threaded on a circular
/// doubly-linked ring per row, so that all columns with a nonzero at a given
/// row are reachable without scanning. Simplices with zero annotation share
/// one dedicated class that owns no column.
class annotation_matrix {
 public:
  explicit annotation_matrix(prime_field field);

  /// Case 1 with the next row from the internal allocator.
  row_index create_cocycle(slot_id slot);
  /// Case 1 with a caller-chosen row index. The index must never have been
  /// used before in this matrix.
  row_index create_cocycle(slot_id slot, row_index row);

  /// Case 2: eliminates the row of maximal index in `boundary_annotation`
  /// from every column and removes it. Returns that row.
  row_index kill_cocycle(std::span<const ann_entry> boundary_annotation);

  void assign_zero(slot_id slot);

  /// Valid until the next mutating call.
  std::span<const ann_entry> find_annotation(slot_id slot);
  bool assigned(slot_id slot) const;
  /// True when the slot's class is the zero class.
  bool is_zero(slot_id slot);

  std::size_t live_rows() const { return live_rows_; }
  std::size_t distinct_columns() const { return av_.size(); }
  std::size_t nonzeros() const { return nonzeros_; }
  bool row_live(row_index row) const;
  std::vector<row_index> live_row_indices() const;
  /// Number of entries threaded on the ring of `row`.
  std::size_t ring_size(row_index row) const;

  std::uint64_t field_ops() const { return field_ops_; }
  const prime_field& field() const { return field_; }

  /// Exhaustive structural check; throws invariant_violation describing the
  /// first failure. O(total entries * ring length).
  void check_invariants() const;

 private:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t zero_column = npos - 1;

  enum class row_state : std::uint8_t { unused, live, dead };

  struct cell {
    std::uint32_t column;
    row_index row;
    field_element coeff;
    std::uint32_t prev, next;
  };

  struct column {
    annotation_vector entries;
    std::vector<std::uint32_t> cells;  // parallel to entries
    std::size_t hash = 0;
    std::uint32_t root = npos;
    bool alive = false;
  };

  std::uint32_t find_root(slot_id slot);
  std::uint32_t unite(std::uint32_t r1, std::uint32_t r2, std::uint32_t keep_column);
  void make_set(slot_id slot);
  void join_zero_class(std::uint32_t root);

  std::uint32_t new_column(annotation_vector entries, std::size_t hash);
  void release_column(std::uint32_t col);
  void link_cells(std::uint32_t col);
  void unlink_cells(std::uint32_t col);
  void av_insert(std::uint32_t col);
  void av_erase(std::uint32_t col);
  std::uint32_t av_search(std::span<const ann_entry> entries, std::size_t hash) const;

  void ring_push(std::uint32_t c);
  void ring_remove(std::uint32_t c);
  void set_row_state(row_index row, row_state st);
  row_state state_of(row_index row) const;

  prime_field field_;

  std::vector<cell> cells_;
  std::vector<std::uint32_t> free_cells_;
  std::vector<column> columns_;
  std::vector<std::uint32_t> free_columns_;
  std::unordered_multimap<std::size_t, std::uint32_t> av_;

  // union-find over slots; parent_ == npos marks an unassigned slot
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint32_t> root_column_;  // column id, zero_column, or npos for non-roots
  std::uint32_t zero_root_ = npos;

  std::vector<std::uint32_t> row_head_;
  std::vector<row_state> row_states_;
  row_index next_row_ = 0;
  std::size_t live_rows_ = 0;
  std::size_t nonzeros_ = 0;
  std::uint64_t field_ops_ = 0;
};

}  // namespace pcoh
