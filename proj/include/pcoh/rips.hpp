#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcoh/simplex_tree.hpp"

namespace pcoh {

/// Points of R^D stored row-major; all points share the same D >= 1.
class point_cloud {
 public:
  explicit point_cloud(std::size_t dimension);
  /// Throws dimension_mismatch on ragged input or D == 0.
  explicit point_cloud(const std::vector<std::vector<double>>& points);

  void add(std::span<const double> point);

  std::size_t size() const { return dimension_ == 0 ? 0 : coords_.size() / dimension_; }
  std::size_t dimension() const { return dimension_; }
  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dimension_, dimension_};
  }

 private:
  std::size_t dimension_;
  std::vector<double> coords_;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Vietoris-Rips complex: a simplex of at most max_dim dimensions enters iff
/// its diameter is <= rho_max, with value = diameter (vertices at 0).
/// Distances and clique expansion run in parallel with OpenMP; the result is
/// finalized and identical to build_rips_serial.
filtered_complex build_rips(const point_cloud& points, double rho_max, int max_dim);

/// Single-threaded reference: enumerates vertex subsets directly, checking
/// every pairwise distance.
filtered_complex build_rips_serial(const point_cloud& points, double rho_max, int max_dim);

}  // namespace pcoh
