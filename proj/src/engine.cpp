#include "pcoh/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pcoh/errors.hpp"
#include "pcoh/reorder.hpp"

namespace pcoh {

persistence_engine::persistence_engine(const filtered_complex& c, prime_field field,
                                       engine_options opts)
    : complex_(c), field_(field), opts_(opts) {
  if (!c.finalized()) throw std::logic_error("persistence_engine needs a finalized complex");
  const auto dims = static_cast<std::size_t>(c.dimension() + 1);
  matrices_.assign(dims, annotation_matrix(field));
  next_slot_.assign(dims, 0);
  marked_by_dim_.assign(dims, 0);
  state_.assign(c.size(), simplex_state::unseen);
  visit_seq_.assign(c.size(), unvisited);
  slot_.assign(c.size(), 0);
  creator_of_row_.assign(c.size(), null_simplex);
}

void persistence_engine::visit(simplex_handle s) {
  if (visit_seq_.at(s) == unvisited) visit_seq_[s] = next_seq_++;
}

slot_id persistence_engine::take_slot(simplex_handle s) {
  auto dim = static_cast<std::size_t>(complex_.dimension(s));
  slot_[s] = next_slot_[dim]++;
  return slot_[s];
}

void persistence_engine::insert_marked_faces(simplex_handle s) {
  for (const auto& f : complex_.boundary(s)) {
    switch (state_[f.face]) {
      case simplex_state::marked:
        lazy_evaluation(f.face);
        break;
      case simplex_state::unseen:
        throw missing_face("MissingFace: face " + std::to_string(f.face) + " of simplex " +
                           std::to_string(s) + " has not been inserted");
      case simplex_state::inserted:
        break;
    }
  }
}

annotation_vector persistence_engine::boundary_annotation(simplex_handle s) {
  annotation_vector acc;
  const int dim = complex_.dimension(s);
  if (dim == 0) return acc;
  auto& faces_matrix = matrices_[static_cast<std::size_t>(dim - 1)];
  const field_element minus_one = field_.neg(1);
  for (const auto& f : complex_.boundary(s)) {
    auto ann = faces_matrix.find_annotation(slot_[f.face]);
    acc = add_scaled(acc, f.sign > 0 ? field_element{1} : minus_one, ann, field_, &ops_);
  }
  return acc;
}

insertion_outcome persistence_engine::create(simplex_handle s) {
  const int dim = complex_.dimension(s);
  const row_index row = visit_seq_[s];
  matrices_[static_cast<std::size_t>(dim)].create_cocycle(take_slot(s), row);
  creator_of_row_[row] = s;
  state_[s] = simplex_state::inserted;
  after_step(dim);
  return {insertion_kind::created, dim, row, std::nullopt};
}

insertion_outcome persistence_engine::kill(simplex_handle s, const annotation_vector& bd) {
  const int dim = complex_.dimension(s);
  const row_index expected = bd.back().row;
  const row_index row = matrices_[static_cast<std::size_t>(dim - 1)].kill_cocycle(bd);
  if (row != expected)
    throw invariant_violation("kill_cocycle removed row " + std::to_string(row) +
                              " instead of the maximal row " + std::to_string(expected));
  matrices_[static_cast<std::size_t>(dim)].assign_zero(take_slot(s));
  state_[s] = simplex_state::inserted;

  const simplex_handle creator = creator_of_row_[row];
  persistence_pair pair{dim - 1, complex_.filtration(creator), complex_.filtration(s), creator, s};
  pairs_.push_back(pair);
  after_step(dim);
  return {insertion_kind::killed, dim, row, pair};
}

insertion_outcome persistence_engine::insert(simplex_handle s) {
  visit(s);
  if (state_.at(s) == simplex_state::inserted)
    throw invariant_violation("simplex " + std::to_string(s) + " inserted twice");
  if (state_[s] == simplex_state::marked) return lazy_evaluation(s);
  insert_marked_faces(s);
  auto bd = boundary_annotation(s);
  return bd.empty() ? create(s) : kill(s, bd);
}

insertion_outcome persistence_engine::lazy_evaluation(simplex_handle s) {
  visit(s);
  const int dim = complex_.dimension(s);
  switch (state_.at(s)) {
    case simplex_state::inserted:
      throw invariant_violation("simplex " + std::to_string(s) + " inserted twice");
    case simplex_state::marked:
      // Known creator: no boundary annotation needed.
      --marked_by_dim_[static_cast<std::size_t>(dim)];
      return create(s);
    case simplex_state::unseen:
      break;
  }
  insert_marked_faces(s);
  auto bd = boundary_annotation(s);
  if (!bd.empty()) return kill(s, bd);
  state_[s] = simplex_state::marked;
  ++marked_by_dim_[static_cast<std::size_t>(dim)];
  if (opts_.record_stats) collector_.sample(matrices_, field_ops());
  return {insertion_kind::deferred, dim, visit_seq_[s], std::nullopt};
}

void persistence_engine::finish() {
  std::vector<simplex_handle> pending;
  for (simplex_handle s = 0; s < state_.size(); ++s)
    if (state_[s] == simplex_state::marked) pending.push_back(s);
  std::sort(pending.begin(), pending.end(),
            [this](simplex_handle a, simplex_handle b) { return visit_seq_[a] < visit_seq_[b]; });
  for (simplex_handle s : pending) lazy_evaluation(s);
}

void persistence_engine::after_step(int dim) {
  if (opts_.check_invariants) {
    matrices_[static_cast<std::size_t>(dim)].check_invariants();
    if (dim > 0) matrices_[static_cast<std::size_t>(dim - 1)].check_invariants();
  }
  if (opts_.record_stats) collector_.sample(matrices_, field_ops());
}

std::uint64_t persistence_engine::field_ops() const {
  std::uint64_t total = ops_;
  for (const auto& m : matrices_) total += m.field_ops();
  return total;
}

std::size_t persistence_engine::live_rows(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= matrices_.size()) return 0;
  return matrices_[static_cast<std::size_t>(dim)].live_rows();
}

std::size_t persistence_engine::marked_count(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= marked_by_dim_.size()) return 0;
  return marked_by_dim_[static_cast<std::size_t>(dim)];
}

annotation_vector persistence_engine::annotation(simplex_handle s) {
  if (state_.at(s) != simplex_state::inserted)
    throw unassigned_slot("simplex " + std::to_string(s) + " has no annotation yet");
  auto ann = matrices_[static_cast<std::size_t>(complex_.dimension(s))].find_annotation(slot_[s]);
  return {ann.begin(), ann.end()};
}

persistence_diagram persistence_engine::diagram() const {
  persistence_diagram d;
  d.pairs = pairs_;
  for (std::size_t dim = 0; dim < matrices_.size(); ++dim) {
    for (row_index row : matrices_[dim].live_row_indices()) {
      simplex_handle c = creator_of_row_[row];
      d.pairs.push_back({static_cast<int>(dim), complex_.filtration(c), infinite_value, c, std::nullopt});
    }
  }
  for (simplex_handle s = 0; s < state_.size(); ++s)
    if (state_[s] == simplex_state::marked)
      d.pairs.push_back({complex_.dimension(s), complex_.filtration(s), infinite_value, s, std::nullopt});
  if (!opts_.emit_zero_length) drop_zero_length(d);
  return d;
}

std::vector<simplex_handle> processing_order(const filtered_complex& c, bool reorder) {
  return reorder ? reordered_filtration(c) : c.filtration_order();
}

persistence_result compute_persistence(const filtered_complex& c, const prime_field& field,
                                       const engine_options& opts) {
  persistence_engine engine(c, field, opts);
  auto step = [&](simplex_handle s) {
    if (opts.lazy)
      engine.lazy_evaluation(s);
    else
      engine.insert(s);
  };
  if (opts.reorder) {
    for (const auto& slab : slab_partition(c))
      for (simplex_handle s : reorder_slab(c, slab)) step(s);
  } else {
    for (simplex_handle s : c.filtration_order()) step(s);
  }
  engine.finish();
  return {engine.diagram(), engine.stats()};
}

}  // namespace pcoh
