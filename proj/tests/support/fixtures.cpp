#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pcoh/io.hpp"

namespace pcoh::testing {

double by_dimension(const vertex_list& v) { return static_cast<double>(v.size() - 1); }

filtered_complex from_maximal(const std::vector<vertex_list>& maximal, const value_rule& rule) {
  filtered_complex c;
  for (const auto& m : maximal) {
    auto sorted = m;
    std::sort(sorted.begin(), sorted.end());
    const auto k = sorted.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      vertex_list face;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(sorted[i]);
      c.insert_simplex(face, rule(face));
    }
  }
  c.finalize();
  return c;
}

filtered_complex revalue(const filtered_complex& c, const std::function<double(simplex_handle)>& rule) {
  filtered_complex out;
  for (simplex_handle s : c.filtration_order()) out.insert_simplex(c.vertices(s), rule(s));
  out.finalize();
  return out;
}

filtered_complex full_triangle() { return from_maximal({{0, 1, 2}}); }

filtered_complex hollow_triangle() { return from_maximal({{0, 1}, {0, 2}, {1, 2}}); }

filtered_complex sphere_boundary(const value_rule& rule) {
  return from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, rule);
}

filtered_complex torus7(const value_rule& rule) {
  std::vector<vertex_list> tris;
  for (vertex_id i = 0; i < 7; ++i) {
    tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return from_maximal(tris, rule);
}

filtered_complex rp2_6(const value_rule& rule) {
  return from_maximal({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}},
                      rule);
}

filtered_complex two_triangles_slab() {
  return from_maximal({{0, 1, 2}, {1, 2, 3}},
                      [](const vertex_list& v) { return v.size() == 1 ? 0.0 : 1.0; });
}

point_cloud random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  point_cloud pc(dim);
  std::vector<double> p(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& x : p) x = u(rng);
    pc.add(p);
  }
  return pc;
}

filtered_complex random_rips(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(4, 12);
  std::uniform_real_distribution<double> radius(0.2, 0.9);
  auto pc = random_cloud(rng, count(rng), 3);
  return build_rips(pc, radius(rng), 3);
}

filtered_complex quantized(const filtered_complex& c, double step) {
  return revalue(c, [&](simplex_handle s) { return std::ceil(c.filtration(s) / step) * step; });
}

point_cloud torus_sample(std::mt19937_64& rng, std::size_t n, double R, double r) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  point_cloud pc(3);
  for (std::size_t i = 0; i < n; ++i) {
    double u = angle(rng), v = angle(rng);
    std::vector<double> p{(R + r * std::cos(v)) * std::cos(u), (R + r * std::cos(v)) * std::sin(u),
                          r * std::sin(v)};
    pc.add(p);
  }
  return pc;
}

std::vector<named_complex> canned_corpus() {
  std::vector<named_complex> out;
  auto add_variants = [&](const std::string& name, const filtered_complex& c) {
    out.push_back({name, c});
    out.push_back({name + "/iso", revalue(c, [](simplex_handle) { return 0.0; })});
    out.push_back({name + "/strict", revalue(c, [&](simplex_handle s) {
                     return static_cast<double>(c.position(s));
                   })});
  };
  add_variants("full_triangle", full_triangle());
  add_variants("hollow_triangle", hollow_triangle());
  add_variants("sphere", sphere_boundary());
  add_variants("torus7", torus7());
  add_variants("rp2", rp2_6());
  add_variants("two_triangles", two_triangles_slab());
  filtered_complex single;
  single.insert_simplex({0}, 0.0);
  single.finalize();
  out.push_back({"single_vertex", single});
  filtered_complex two;
  two.insert_simplex({0}, 0.0);
  two.insert_simplex({1}, 1.0);
  two.finalize();
  out.push_back({"two_components", two});
  filtered_complex empty;
  empty.finalize();
  out.push_back({"empty", empty});
  return out;
}

std::vector<named_complex> full_corpus(std::size_t random_count, std::uint64_t seed) {
  auto out = canned_corpus();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    auto c = random_rips(rng);
    const std::string name = "rips#" + std::to_string(i);
    out.push_back({name + "/q", quantized(c, 0.25)});
    out.push_back({name + "/iso", revalue(c, [](simplex_handle) { return 0.0; })});
    out.push_back({name, std::move(c)});
  }
  return out;
}

}  // namespace pcoh::testing
