#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcoh/annotation_matrix.hpp"

namespace pcoh {

struct dimension_peaks {
  std::size_t g_m = 0;  // max live rows in this dimension
  std::size_t s_m = 0;  // max distinct nonzero columns in this dimension
};

struct run_stats {
  std::uint64_t field_ops = 0;
  std::size_t matrix_nonzeros_peak = 0;  // max |M| summed over dimensions
  std::size_t g_max_total = 0;           // G_m: max over time of sum_p g_p
  std::size_t s_max_total = 0;           // S_m: max over time of sum_p s_p
  std::vector<dimension_peaks> per_dim;
};

/// Samples the annotation matrices of a run; the engine calls sample() after
/// every simplex insertion when statistics are enabled.
class stats_collector {
 public:
  void sample(std::span<const annotation_matrix> matrices, std::uint64_t field_ops);
  const run_stats& stats() const { return stats_; }

 private:
  run_stats stats_;
};

/// Flat `key=value` lines: field_ops, matrix_nonzeros_peak, G_m, S_m, then
/// g_m[p] and s_m[p] per dimension.
std::string format_stats(const run_stats& s);

}  // namespace pcoh
