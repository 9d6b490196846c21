#include "pcoh/diagram.hpp"

#include <algorithm>
#include <iterator>

namespace pcoh {

std::vector<diagram_point> persistence_diagram::points() const {
  std::vector<diagram_point> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.dim, p.birth, p.death});
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t persistence_diagram::essential_count(int dim) const {
  return static_cast<std::size_t>(std::count_if(
      pairs.begin(), pairs.end(), [dim](const auto& p) { return p.dim == dim && p.essential(); }));
}

bool diagram_equal(const persistence_diagram& a, const persistence_diagram& b) {
  return a.points() == b.points();
}

std::vector<diagram_point> diagram_difference(const persistence_diagram& a,
                                              const persistence_diagram& b) {
  auto pa = a.points();
  auto pb = b.points();
  std::vector<diagram_point> out;
  std::set_difference(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(out));
  return out;
}

void drop_zero_length(persistence_diagram& d) {
  std::erase_if(d.pairs, [](const auto& p) { return p.birth == p.death; });
}

}  // namespace pcoh
