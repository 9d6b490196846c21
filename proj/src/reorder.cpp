#include "pcoh/reorder.hpp"

#include <string>
#include <unordered_map>

#include "pcoh/errors.hpp"

namespace pcoh {

std::vector<iso_slab> slab_partition(const filtered_complex& c) {
  std::vector<iso_slab> slabs;
  for (simplex_handle s : c.filtration_order()) {
    filtration_value v = c.filtration(s);
    if (slabs.empty() || slabs.back().value != v) slabs.push_back({v, {}});
    slabs.back().simplices.push_back(s);
  }
  return slabs;
}

namespace {

class slab_walker {
 public:
  slab_walker(const filtered_complex& c, const iso_slab& slab, traversal_counters& counters)
      : c_(c), slab_(slab), counters_(counters) {
    local_.reserve(slab.simplices.size());
    for (std::uint32_t i = 0; i < slab.simplices.size(); ++i) {
      simplex_handle s = slab.simplices[i];
      if (c.filtration(s) != slab.value)
        throw slab_not_relatively_closed("SlabNotRelativelyClosed: simplex " + std::to_string(s) +
                                         " does not carry the slab value");
      if (!local_.emplace(s, i).second)
        throw slab_not_relatively_closed("SlabNotRelativelyClosed: simplex " + std::to_string(s) +
                                         " listed twice");
    }
    for (simplex_handle s : slab.simplices)
      for (const auto& f : c.boundary(s))
        if (c.filtration(f.face) == slab.value && !local_.contains(f.face))
          throw slab_not_relatively_closed("SlabNotRelativelyClosed: face " +
                                           std::to_string(f.face) + " of slab simplex " +
                                           std::to_string(s) + " is outside the slab");
    up_.assign(slab.simplices.size(), false);
    down_.assign(slab.simplices.size(), false);
  }

  std::vector<simplex_handle> run() {
    order_.reserve(slab_.simplices.size());
    std::vector<simplex_handle> maximal;
    for (simplex_handle s : slab_.simplices) {
      maximal.clear();
      walk_up(s, maximal);
      for (simplex_handle m : maximal) walk_down(m);
    }
    return std::move(order_);
  }

 private:
  void walk_up(simplex_handle s, std::vector<simplex_handle>& maximal) {
    auto i = local_.at(s);
    if (up_[i]) return;
    up_[i] = true;
    std::vector<simplex_handle> cofaces;
    for (simplex_handle cf : c_.codim1_cofaces(s, value_range::exactly(slab_.value)))
      if (local_.contains(cf)) cofaces.push_back(cf);
    counters_.up_edges += cofaces.size();
    if (cofaces.empty()) {
      maximal.push_back(s);
      return;
    }
    for (simplex_handle cf : cofaces) walk_up(cf, maximal);
  }

  void walk_down(simplex_handle s) {
    auto i = local_.at(s);
    if (down_[i]) return;
    down_[i] = true;
    for (const auto& f : c_.boundary(s)) {
      if (!local_.contains(f.face)) continue;  // already in the complex
      ++counters_.down_edges;
      walk_down(f.face);
    }
    order_.push_back(s);
  }

  const filtered_complex& c_;
  const iso_slab& slab_;
  traversal_counters& counters_;
  std::unordered_map<simplex_handle, std::uint32_t> local_;
  std::vector<bool> up_, down_;
  std::vector<simplex_handle> order_;
};

}  // namespace

std::vector<simplex_handle> reorder_slab(const filtered_complex& c, const iso_slab& slab,
                                         traversal_counters* counters) {
  if (slab.simplices.size() == 1) {
    // Nothing to reorder; only the closure check remains.
    simplex_handle s = slab.simplices.front();
    if (c.filtration(s) != slab.value)
      throw slab_not_relatively_closed("SlabNotRelativelyClosed: simplex " + std::to_string(s) +
                                       " does not carry the slab value");
    for (const auto& f : c.boundary(s))
      if (c.filtration(f.face) == slab.value)
        throw slab_not_relatively_closed("SlabNotRelativelyClosed: face " + std::to_string(f.face) +
                                         " of slab simplex " + std::to_string(s) +
                                         " is outside the slab");
    return {s};
  }
  traversal_counters scratch;
  slab_walker walker(c, slab, counters ? *counters : scratch);
  return walker.run();
}

std::vector<simplex_handle> reordered_filtration(const filtered_complex& c) {
  std::vector<simplex_handle> out;
  out.reserve(c.size());
  for (const auto& slab : slab_partition(c)) {
    auto part = reorder_slab(c, slab);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace pcoh
