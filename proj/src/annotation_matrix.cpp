#include "pcoh/annotation_matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pcoh/errors.hpp"

namespace pcoh {

annotation_matrix::annotation_matrix(prime_field field) : field_(field) {}

// ---- rows --------------------------------------------------------------

annotation_matrix::row_state annotation_matrix::state_of(row_index row) const {
  return row < row_states_.size() ? row_states_[row] : row_state::unused;
}

void annotation_matrix::set_row_state(row_index row, row_state st) {
  if (row >= row_states_.size()) {
    row_states_.resize(row + 1, row_state::unused);
    row_head_.resize(row + 1, npos);
  }
  row_states_[row] = st;
}

bool annotation_matrix::row_live(row_index row) const { return state_of(row) == row_state::live; }

std::vector<row_index> annotation_matrix::live_row_indices() const {
  std::vector<row_index> out;
  out.reserve(live_rows_);
  for (row_index r = 0; r < row_states_.size(); ++r)
    if (row_states_[r] == row_state::live) out.push_back(r);
  return out;
}

std::size_t annotation_matrix::ring_size(row_index row) const {
  if (row >= row_head_.size() || row_head_[row] == npos) return 0;
  std::size_t n = 0;
  std::uint32_t c = row_head_[row];
  do {
    ++n;
    c = cells_[c].next;
  } while (c != row_head_[row]);
  return n;
}

void annotation_matrix::ring_push(std::uint32_t c) {
  std::uint32_t& head = row_head_[cells_[c].row];
  if (head == npos) {
    cells_[c].prev = cells_[c].next = c;
    head = c;
    return;
  }
  std::uint32_t tail = cells_[head].prev;
  cells_[c].prev = tail;
  cells_[c].next = head;
  cells_[tail].next = c;
  cells_[head].prev = c;
}

void annotation_matrix::ring_remove(std::uint32_t c) {
  std::uint32_t& head = row_head_[cells_[c].row];
  if (cells_[c].next == c) {
    head = npos;
    return;
  }
  cells_[cells_[c].prev].next = cells_[c].next;
  cells_[cells_[c].next].prev = cells_[c].prev;
  if (head == c) head = cells_[c].next;
}

// ---- columns -----------------------------------------------------------

std::uint32_t annotation_matrix::new_column(annotation_vector entries, std::size_t hash) {
  std::uint32_t id;
  if (!free_columns_.empty()) {
    id = free_columns_.back();
    free_columns_.pop_back();
  } else {
    id = static_cast<std::uint32_t>(columns_.size());
    columns_.emplace_back();
  }
  column& col = columns_[id];
  col.entries = std::move(entries);
  col.hash = hash;
  col.root = npos;
  col.alive = true;
  return id;
}

void annotation_matrix::release_column(std::uint32_t id) {
  column& col = columns_[id];
  col.entries.clear();
  col.cells.clear();
  col.alive = false;
  col.root = npos;
  free_columns_.push_back(id);
}

void annotation_matrix::link_cells(std::uint32_t id) {
  column& col = columns_[id];
  col.cells.resize(col.entries.size());
  for (std::size_t k = 0; k < col.entries.size(); ++k) {
    std::uint32_t c;
    if (!free_cells_.empty()) {
      c = free_cells_.back();
      free_cells_.pop_back();
    } else {
      c = static_cast<std::uint32_t>(cells_.size());
      cells_.emplace_back();
    }
    cells_[c] = {id, col.entries[k].row, col.entries[k].coeff, npos, npos};
    ring_push(c);
    col.cells[k] = c;
  }
  nonzeros_ += col.entries.size();
}

void annotation_matrix::unlink_cells(std::uint32_t id) {
  column& col = columns_[id];
  for (std::uint32_t c : col.cells) {
    ring_remove(c);
    free_cells_.push_back(c);
  }
  nonzeros_ -= col.cells.size();
  col.cells.clear();
}

void annotation_matrix::av_insert(std::uint32_t id) { av_.emplace(columns_[id].hash, id); }

void annotation_matrix::av_erase(std::uint32_t id) {
  auto [lo, hi] = av_.equal_range(columns_[id].hash);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == id) {
      av_.erase(it);
      return;
    }
  }
}

std::uint32_t annotation_matrix::av_search(std::span<const ann_entry> entries, std::size_t hash) const {
  auto [lo, hi] = av_.equal_range(hash);
  for (auto it = lo; it != hi; ++it) {
    const auto& e = columns_[it->second].entries;
    if (std::equal(e.begin(), e.end(), entries.begin(), entries.end())) return it->second;
  }
  return npos;
}

// ---- union-find --------------------------------------------------------

bool annotation_matrix::assigned(slot_id slot) const {
  return slot < parent_.size() && parent_[slot] != npos;
}

void annotation_matrix::make_set(slot_id slot) {
  if (assigned(slot))
    throw slot_already_assigned("SlotAlreadyAssigned: slot " + std::to_string(slot));
  if (slot >= parent_.size()) {
    parent_.resize(slot + 1, npos);
    rank_.resize(slot + 1, 0);
    root_column_.resize(slot + 1, npos);
  }
  parent_[slot] = slot;
  rank_[slot] = 0;
  root_column_[slot] = npos;
}

std::uint32_t annotation_matrix::find_root(slot_id slot) {
  std::uint32_t root = slot;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[slot] != root) {
    std::uint32_t next = parent_[slot];
    parent_[slot] = root;
    slot = next;
  }
  return root;
}

std::uint32_t annotation_matrix::unite(std::uint32_t r1, std::uint32_t r2, std::uint32_t keep_column) {
  if (rank_[r1] < rank_[r2]) std::swap(r1, r2);
  parent_[r2] = r1;
  if (rank_[r1] == rank_[r2]) ++rank_[r1];
  root_column_[r2] = npos;
  root_column_[r1] = keep_column;
  if (keep_column == zero_column)
    zero_root_ = r1;
  else
    columns_[keep_column].root = r1;
  return r1;
}

void annotation_matrix::join_zero_class(std::uint32_t root) {
  if (zero_root_ == npos) {
    zero_root_ = root;
    root_column_[root] = zero_column;
  } else {
    unite(root, zero_root_, zero_column);
  }
}

// ---- public operations -------------------------------------------------

row_index annotation_matrix::create_cocycle(slot_id slot) { return create_cocycle(slot, next_row_); }

row_index annotation_matrix::create_cocycle(slot_id slot, row_index row) {
  if (state_of(row) != row_state::unused)
    throw invariant_violation("row index " + std::to_string(row) + " was already used");
  make_set(slot);
  annotation_vector entries{{row, 1}};
  std::size_t h = hash_annotation(entries);
  std::uint32_t col = new_column(std::move(entries), h);
  set_row_state(row, row_state::live);
  ++live_rows_;
  next_row_ = std::max(next_row_, row + 1);
  link_cells(col);
  av_insert(col);
  columns_[col].root = slot;
  root_column_[slot] = col;
  return row;
}

void annotation_matrix::assign_zero(slot_id slot) {
  make_set(slot);
  join_zero_class(slot);
}

std::span<const ann_entry> annotation_matrix::find_annotation(slot_id slot) {
  if (!assigned(slot)) throw unassigned_slot("UnassignedSlot: slot " + std::to_string(slot));
  std::uint32_t col = root_column_[find_root(slot)];
  if (col == zero_column) return {};
  return columns_[col].entries;
}

bool annotation_matrix::is_zero(slot_id slot) { return find_annotation(slot).empty(); }

row_index annotation_matrix::kill_cocycle(std::span<const ann_entry> boundary_annotation) {
  if (boundary_annotation.empty())
    throw zero_annotation("ZeroAnnotation: kill_cocycle needs a nonzero boundary annotation");
  // the caller's span may alias a column that is rewritten below
  const annotation_vector bd(boundary_annotation.begin(), boundary_annotation.end());
  for (const auto& e : bd)
    if (!row_live(e.row))
      throw invariant_violation("boundary annotation references dead row " + std::to_string(e.row));

  const auto [j, cj] = bd.back();

  // Updating a column relinks its cells, including the one on ring j.
  std::vector<std::pair<std::uint32_t, field_element>> targets;
  if (std::uint32_t head = row_head_[j]; head != npos) {
    std::uint32_t c = head;
    do {
      targets.emplace_back(cells_[c].column, cells_[c].coeff);
      c = cells_[c].next;
    } while (c != head);
  }

  const field_element inv_cj = field_.inv(cj);
  ++field_ops_;
  for (const auto& [col, f] : targets) {
    field_element lambda = field_.neg(field_.mul(f, inv_cj));
    field_ops_ += 2;
    annotation_vector updated = add_scaled(columns_[col].entries, lambda, bd, field_, &field_ops_);

    av_erase(col);
    unlink_cells(col);
    std::uint32_t root = columns_[col].root;

    if (updated.empty()) {
      release_column(col);
      root_column_[root] = npos;
      join_zero_class(root);
      continue;
    }
    std::size_t h = hash_annotation(updated);
    if (std::uint32_t other = av_search(updated, h); other != npos) {
      release_column(col);
      root_column_[root] = npos;
      unite(root, columns_[other].root, other);
      continue;
    }
    columns_[col].entries = std::move(updated);
    columns_[col].hash = h;
    link_cells(col);
    av_insert(col);
  }

  if (row_head_[j] != npos)
    throw invariant_violation("row " + std::to_string(j) + " not cleared by kill_cocycle");
  set_row_state(j, row_state::dead);
  --live_rows_;
  return j;
}

// ---- invariants --------------------------------------------------------

void annotation_matrix::check_invariants() const {
  auto fail = [](const std::string& what) { throw invariant_violation("annotation matrix: " + what); };

  std::size_t alive = 0, column_cells = 0;
  for (std::uint32_t id = 0; id < columns_.size(); ++id) {
    const column& col = columns_[id];
    if (!col.alive) continue;
    ++alive;
    if (col.entries.empty()) fail("stored zero column " + std::to_string(id));
    if (!is_canonical(col.entries, field_)) fail("non-canonical column " + std::to_string(id));
    if (col.cells.size() != col.entries.size()) fail("cell/entry count mismatch");
    if (col.hash != hash_annotation(col.entries)) fail("stale hash");
    for (std::size_t k = 0; k < col.cells.size(); ++k) {
      const cell& c = cells_[col.cells[k]];
      if (c.column != id || c.row != col.entries[k].row || c.coeff != col.entries[k].coeff)
        fail("cell does not mirror its column entry");
      if (state_of(c.row) != row_state::live) fail("entry on non-live row " + std::to_string(c.row));
    }
    column_cells += col.cells.size();
    if (col.root >= parent_.size() || parent_[col.root] != col.root || root_column_[col.root] != id)
      fail("column " + std::to_string(id) + " not owned by a uf root");
    std::size_t hits = 0;
    auto [lo, hi] = av_.equal_range(col.hash);
    for (auto it = lo; it != hi; ++it) {
      if (it->second == id) ++hits;
      else if (columns_[it->second].entries == col.entries) fail("duplicate columns in AV");
    }
    if (hits != 1) fail("column missing from AV");
  }
  if (alive != av_.size()) fail("AV size differs from live column count");
  if (column_cells != nonzeros_) fail("nonzero counter drift");

  std::size_t ring_cells = 0, nonempty = 0, live = 0;
  for (row_index r = 0; r < row_states_.size(); ++r) {
    if (row_states_[r] == row_state::live) ++live;
    std::uint32_t head = row_head_[r];
    if (head == npos) continue;
    ++nonempty;
    if (row_states_[r] != row_state::live) fail("ring on non-live row " + std::to_string(r));
    std::uint32_t c = head;
    do {
      const cell& cl = cells_[c];
      if (cl.row != r) fail("cell linked on wrong ring");
      if (cells_[cl.next].prev != c) fail("broken ring links");
      const column& col = columns_[cl.column];
      if (!col.alive || std::find(col.cells.begin(), col.cells.end(), c) == col.cells.end())
        fail("ring cell not owned by a live column");
      ++ring_cells;
      c = cl.next;
    } while (c != head && ring_cells <= nonzeros_);
  }
  if (ring_cells != nonzeros_) fail("rings and columns disagree on entries");
  if (live != live_rows_ || nonempty != live_rows_) fail("live row count mismatch");

  std::size_t column_roots = 0;
  for (std::uint32_t s = 0; s < parent_.size(); ++s) {
    if (parent_[s] == npos) continue;
    if (parent_[s] != s) {
      if (root_column_[s] != npos) fail("non-root holds a column");
      continue;
    }
    if (root_column_[s] == zero_column) {
      if (s != zero_root_) fail("second zero class");
    } else if (root_column_[s] == npos || !columns_[root_column_[s]].alive) {
      fail("uf root without annotation");
    } else {
      ++column_roots;
    }
  }
  if (column_roots != av_.size()) fail("AV/UF bijection broken");
}

}  // namespace pcoh
