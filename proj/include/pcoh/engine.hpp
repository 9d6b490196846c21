#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcoh/annotation_matrix.hpp"
#include "pcoh/diagram.hpp"
#include "pcoh/prime_field.hpp"
#include "pcoh/simplex_tree.hpp"
#include "pcoh/stats.hpp"

namespace pcoh {

struct engine_options {
  bool lazy = true;
  bool reorder = true;
  bool record_stats = false;
  bool emit_zero_length = false;
  /// Run annotation_matrix::check_invariants() after every insertion.
  bool check_invariants = false;
};

enum class insertion_kind { created, killed, deferred };

struct insertion_outcome {
  insertion_kind kind;
  int dim;        // dimension of the inserted simplex
  row_index row;  // created row, or killed row (in dimension dim-1)
  std::optional<persistence_pair> pair;
};

enum class simplex_state : std::uint8_t { unseen, marked, inserted };

/// Persistent cohomology by annotation updates. Simplices are fed one at a
/// time in an inclusion-respecting order; one compressed annotation matrix
/// is kept per dimension.
///
/// Rows are keyed by the position at which their creator was first visited,
/// so the row of maximal index is always the youngest creator in the
/// processing order, even when lazy evaluation delays the actual insertion.
class persistence_engine {
 public:
  persistence_engine(const filtered_complex& c, prime_field field, engine_options opts = {});

  /// Eager insertion. Marked faces are inserted as creators first; every
  /// other face must already be inserted (missing_face otherwise).
  insertion_outcome insert(simplex_handle s);

  /// Lazy insertion: a creator is only marked, and inserted once one of its
  /// cofaces needs it. Returns the outcome of the step (deferred for a
  /// newly marked creator).
  insertion_outcome lazy_evaluation(simplex_handle s);

  /// Inserts every still-marked simplex as a creator, in visiting order.
  void finish();

  /// Pairs emitted so far plus one essential pair per live or marked
  /// creator. Zero-length pairs are dropped unless emit_zero_length.
  persistence_diagram diagram() const;

  std::size_t live_rows(int dim) const;
  std::size_t marked_count(int dim) const;
  simplex_state state(simplex_handle s) const { return state_.at(s); }
  const annotation_matrix& matrix(int dim) const { return matrices_.at(static_cast<std::size_t>(dim)); }
  /// Current annotation of an inserted simplex.
  annotation_vector annotation(simplex_handle s);
  std::uint64_t field_ops() const;
  const run_stats& stats() const { return collector_.stats(); }

 private:
  void visit(simplex_handle s);
  void insert_marked_faces(simplex_handle s);
  annotation_vector boundary_annotation(simplex_handle s);
  insertion_outcome create(simplex_handle s);
  insertion_outcome kill(simplex_handle s, const annotation_vector& bd);
  slot_id take_slot(simplex_handle s);
  void after_step(int dim);

  static constexpr std::uint32_t unvisited = UINT32_MAX;

  const filtered_complex& complex_;
  prime_field field_;
  engine_options opts_;
  std::vector<annotation_matrix> matrices_;
  std::vector<simplex_state> state_;
  std::vector<std::uint32_t> visit_seq_;
  std::vector<slot_id> slot_;
  std::vector<slot_id> next_slot_;
  std::vector<std::size_t> marked_by_dim_;
  std::vector<simplex_handle> creator_of_row_;
  std::vector<persistence_pair> pairs_;
  std::uint32_t next_seq_ = 0;
  std::uint64_t ops_ = 0;
  stats_collector collector_;
};

/// Order in which compute_persistence feeds simplices: the filtration order,
/// or its per-slab reordering.
std::vector<simplex_handle> processing_order(const filtered_complex& c, bool reorder);

struct persistence_result {
  persistence_diagram diagram;
  run_stats stats;
};

/// Runs the engine over the whole (finalized) complex.
persistence_result compute_persistence(const filtered_complex& c, const prime_field& field,
                                       const engine_options& opts = {});

}  // namespace pcoh
