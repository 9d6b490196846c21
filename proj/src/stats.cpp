#include "pcoh/stats.hpp"

#include <algorithm>
#include <sstream>

namespace pcoh {

void stats_collector::sample(std::span<const annotation_matrix> matrices, std::uint64_t field_ops) {
  if (stats_.per_dim.size() < matrices.size()) stats_.per_dim.resize(matrices.size());
  std::size_t g = 0, s = 0, nnz = 0;
  for (std::size_t p = 0; p < matrices.size(); ++p) {
    const auto& m = matrices[p];
    auto& peaks = stats_.per_dim[p];
    peaks.g_m = std::max(peaks.g_m, m.live_rows());
    peaks.s_m = std::max(peaks.s_m, m.distinct_columns());
    g += m.live_rows();
    s += m.distinct_columns();
    nnz += m.nonzeros();
  }
  stats_.g_max_total = std::max(stats_.g_max_total, g);
  stats_.s_max_total = std::max(stats_.s_max_total, s);
  stats_.matrix_nonzeros_peak = std::max(stats_.matrix_nonzeros_peak, nnz);
  stats_.field_ops = field_ops;
}

std::string format_stats(const run_stats& s) {
  std::ostringstream out;
  out << "field_ops=" << s.field_ops << '\n'
      << "matrix_nonzeros_peak=" << s.matrix_nonzeros_peak << '\n'
      << "G_m=" << s.g_max_total << '\n'
      << "S_m=" << s.s_max_total << '\n';
  for (std::size_t p = 0; p < s.per_dim.size(); ++p)
    out << "g_m[" << p << "]=" << s.per_dim[p].g_m << '\n' << "s_m[" << p << "]=" << s.per_dim[p].s_m << '\n';
  return out.str();
}

}  // namespace pcoh
