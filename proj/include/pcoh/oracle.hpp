#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcoh/diagram.hpp"
#include "pcoh/prime_field.hpp"
#include "pcoh/simplex_tree.hpp"

/// Reference persistence by left-to-right reduction of the signed boundary
/// matrix over Z_p. Independent of the annotation engine; used to check it.
namespace pcoh::oracle {

/// Diagram of the filtration order of `c`.
persistence_diagram reduce(const filtered_complex& c, const prime_field& field,
                           bool emit_zero_length = false);

/// Diagram of an explicit inclusion-respecting order of all simplices.
persistence_diagram reduce(const filtered_complex& c, const prime_field& field,
                           std::span<const simplex_handle> order, bool emit_zero_length = false);

/// Betti numbers (dimensions 0..d, d the top dimension present in the
/// prefix) of the first `prefix_len` simplices of the filtration order.
std::vector<std::size_t> betti_numbers(const filtered_complex& c, const prime_field& field,
                                       std::size_t prefix_len);

/// betti_numbers for every prefix length 0..|order| of `order`, from a
/// single reduction. Entry i has c.dimension()+1 values.
std::vector<std::vector<std::size_t>> betti_profile(const filtered_complex& c,
                                                    const prime_field& field,
                                                    std::span<const simplex_handle> order);

}  // namespace pcoh::oracle
