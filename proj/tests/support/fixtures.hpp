#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pcoh/rips.hpp"
#include "pcoh/simplex_tree.hpp"

namespace pcoh::testing {

using vertex_list = std::vector<vertex_id>;
using value_rule = std::function<double(const vertex_list&)>;

/// Value = dimension of the simplex.
double by_dimension(const vertex_list& v);

/// Closure of the given maximal simplices, valued by `rule`; finalized.
filtered_complex from_maximal(const std::vector<vertex_list>& maximal, const value_rule& rule = by_dimension);

/// Same simplices with new values (rule must be monotone); finalized.
filtered_complex revalue(const filtered_complex& c, const std::function<double(simplex_handle)>& rule);

// vertices a,b,c = 0,1,2
filtered_complex full_triangle();    // a,b,c:0  ab,ac,bc:1  abc:2
filtered_complex hollow_triangle();  // a,b,c:0  ab,ac,bc:1
filtered_complex sphere_boundary(const value_rule& rule = by_dimension);  // boundary of a tetrahedron
filtered_complex torus7(const value_rule& rule = by_dimension);           // 7-vertex torus
filtered_complex rp2_6(const value_rule& rule = by_dimension);            // 6-vertex projective plane
/// Triangles abc, bcd (a..d = 0..3): vertices at 0, edges and triangles at 1.
filtered_complex two_triangles_slab();

/// Uniform points in [0,1]^dim.
point_cloud random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t dim);

/// Rips complex of 4..12 random points in R^3, max_dim 3, random rho_max.
filtered_complex random_rips(std::mt19937_64& rng);

/// Values rounded up to multiples of `step`, creating large iso-slabs.
filtered_complex quantized(const filtered_complex& c, double step);

/// Points on a (R, r) torus in R^3 at random angles.
point_cloud torus_sample(std::mt19937_64& rng, std::size_t n, double R = 2.0, double r = 1.0);

struct named_complex {
  std::string name;
  filtered_complex complex;
};

/// Hand-made fixtures, with dimension values, with every simplex at one
/// value, and with a strict order of distinct values.
std::vector<named_complex> canned_corpus();

/// canned_corpus() plus `random_count` random Rips complexes and their
/// quantized and single-value variants.
std::vector<named_complex> full_corpus(std::size_t random_count, std::uint64_t seed);

}  // namespace pcoh::testing
