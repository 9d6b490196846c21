#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcoh/prime_field.hpp"

namespace pcoh {

/// Index of a cocycle (a row of the annotation matrix). Unique per run and
/// never reused; a larger index means a younger cocycle.
using row_index = std::uint32_t;

struct ann_entry {
  row_index row;
  field_element coeff;

  friend bool operator==(const ann_entry&, const ann_entry&) = default;
};

/// Sparse annotation vector: nonzero entries sorted by strictly increasing
/// row. The empty vector is the zero annotation.
using annotation_vector = std::vector<ann_entry>;

struct sum_result {
  annotation_vector sum;
  /// Entry of maximal row index in `sum`, if nonzero.
  std::optional<ann_entry> max_entry;
};

/// a1 + a2 with exact cancellation. Increments *ops once per field operation.
sum_result sum_ann(std::span<const ann_entry> a1, std::span<const ann_entry> a2,
                   const prime_field& field, std::uint64_t* ops = nullptr);

/// lambda * a; the zero vector when lambda == 0.
annotation_vector scale_ann(std::span<const ann_entry> a, field_element lambda,
                            const prime_field& field, std::uint64_t* ops = nullptr);

/// a + lambda * b, the fused form used by the matrix and the engine.
annotation_vector add_scaled(std::span<const ann_entry> a, field_element lambda,
                             std::span<const ann_entry> b, const prime_field& field,
                             std::uint64_t* ops = nullptr);

/// Rows strictly increasing, coefficients in [1, p).
bool is_canonical(std::span<const ann_entry> a, const prime_field& field);

std::size_t hash_annotation(std::span<const ann_entry> a);

}  // namespace pcoh
