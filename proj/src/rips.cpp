#include "pcoh/rips.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pcoh/errors.hpp"

namespace pcoh {

point_cloud::point_cloud(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw dimension_mismatch("DimensionMismatch: ambient dimension must be >= 1");
}

point_cloud::point_cloud(const std::vector<std::vector<double>>& points)
    : point_cloud(points.empty() ? 1 : points.front().size()) {
  for (const auto& p : points) add(p);
}

void point_cloud::add(std::span<const double> point) {
  if (point.size() != dimension_)
    throw dimension_mismatch("DimensionMismatch: point " + std::to_string(size()) + " has " +
                             std::to_string(point.size()) + " coordinates, expected " +
                             std::to_string(dimension_));
  coords_.insert(coords_.end(), point.begin(), point.end());
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

namespace {

void check_parameters(double rho_max, int max_dim) {
  if (!(rho_max >= 0)) throw input_error("rho_max must be >= 0");
  if (max_dim < 0) throw input_error("max_dim must be >= 0");
}

struct clique {
  std::vector<vertex_id> vertices;
  double value;
};

}  // namespace

filtered_complex build_rips(const point_cloud& points, double rho_max, int max_dim) {
  check_parameters(rho_max, max_dim);
  const auto n = static_cast<std::int64_t>(points.size());

  std::vector<double> dist(static_cast<std::size_t>(n * n), 0.0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j) {
      double d = euclidean_distance(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      dist[static_cast<std::size_t>(i * n + j)] = d;
      dist[static_cast<std::size_t>(j * n + i)] = d;
    }
  auto d = [&](vertex_id a, vertex_id b) { return dist[static_cast<std::size_t>(a) * n + b]; };

  // upper[v]: neighbors u > v, ascending
  std::vector<std::vector<vertex_id>> upper(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j)
      if (dist[static_cast<std::size_t>(i * n + j)] <= rho_max)
        upper[static_cast<std::size_t>(i)].push_back(static_cast<vertex_id>(j));

  // Cliques grouped by their smallest vertex, each group expanded independently.
  std::vector<std::vector<clique>> by_root(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t root = 0; root < n; ++root) {
    auto& out = by_root[static_cast<std::size_t>(root)];
    std::vector<vertex_id> current{static_cast<vertex_id>(root)};
    out.push_back({current, 0.0});
    auto expand = [&](auto&& self, const std::vector<vertex_id>& candidates, double value) -> void {
      if (static_cast<int>(current.size()) > max_dim) return;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        vertex_id u = candidates[k];
        double v = value;
        for (vertex_id w : current) v = std::max(v, d(w, u));
        current.push_back(u);
        out.push_back({current, v});
        std::vector<vertex_id> next;
        const auto& nu = upper[u];
        std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(k) + 1, candidates.end(),
                              nu.begin(), nu.end(), std::back_inserter(next));
        self(self, next, v);
        current.pop_back();
      }
    };
    expand(expand, upper[static_cast<std::size_t>(root)], 0.0);
  }

  filtered_complex c;
  for (const auto& group : by_root)
    for (const auto& cl : group) c.insert_simplex(cl.vertices, cl.value);
  c.finalize();
  return c;
}

filtered_complex build_rips_serial(const point_cloud& points, double rho_max, int max_dim) {
  check_parameters(rho_max, max_dim);
  const std::size_t n = points.size();
  filtered_complex c;
  std::vector<vertex_id> subset;
  auto grow = [&](auto&& self, vertex_id start, double diameter) -> void {
    for (vertex_id u = start; u < n; ++u) {
      double diam = diameter;
      bool fits = true;
      for (vertex_id w : subset) {
        double dw = euclidean_distance(points[w], points[u]);
        if (dw > rho_max) fits = false;
        diam = std::max(diam, dw);
      }
      if (!fits) continue;
      subset.push_back(u);
      c.insert_simplex(subset, diam);
      if (static_cast<int>(subset.size()) <= max_dim) self(self, u + 1, diam);
      subset.pop_back();
    }
  };
  grow(grow, 0, 0.0);
  c.finalize();
  return c;
}

}  // namespace pcoh
