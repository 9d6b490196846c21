#include <algorithm>
#include <map>
#include <vector>

#include "pcoh/io.hpp"

namespace pcoh {

filtered_complex close_complex(const filtered_complex& c) {
  // simplices grouped by dimension, keyed by sorted vertex list
  std::vector<std::map<std::vector<vertex_id>, filtration_value>> by_dim(
      static_cast<std::size_t>(std::max(c.dimension() + 1, 0)));
  std::vector<std::map<std::vector<vertex_id>, bool>> given(by_dim.size());
  for (simplex_handle s : c.simplices()) {
    auto dim = static_cast<std::size_t>(c.dimension(s));
    auto verts = c.vertices(s);
    by_dim[dim][verts] = c.filtration(s);
    given[dim][verts] = true;
  }
  for (std::size_t dim = by_dim.size(); dim-- > 1;) {
    for (const auto& [verts, value] : by_dim[dim]) {
      for (std::size_t j = 0; j < verts.size(); ++j) {
        auto face = verts;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        if (given[dim - 1].contains(face)) continue;
        auto [it, fresh] = by_dim[dim - 1].try_emplace(face, value);
        if (!fresh) it->second = std::min(it->second, value);
      }
    }
  }
  filtered_complex out;
  for (const auto& layer : by_dim)
    for (const auto& [verts, value] : layer) out.insert_simplex(verts, value);
  out.finalize();
  return out;
}

}  // namespace pcoh
