#include "pcoh/simplex_tree.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

std::string format_vertices(std::span<const vertex_id> vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

auto find_label(const std::vector<std::pair<vertex_id, simplex_handle>>& children, vertex_id label) {
  return std::lower_bound(children.begin(), children.end(), label,
                          [](const auto& entry, vertex_id l) { return entry.first < l; });
}

}  // namespace

const filtered_complex::node& filtered_complex::node_at(simplex_handle s) const {
  if (s >= nodes_.size() || !nodes_[s].present)
    throw unknown_simplex("UnknownSimplex: invalid handle " + std::to_string(s));
  return nodes_[s];
}

void filtered_complex::require_finalized(const char* what) const {
  if (!finalized_) throw std::logic_error(std::string(what) + " requires a finalized complex");
}

simplex_handle filtered_complex::child(simplex_handle parent, vertex_id label) const {
  const auto& children = parent == null_simplex ? roots_ : nodes_[parent].children;
  auto it = find_label(children, label);
  return (it != children.end() && it->first == label) ? it->second : null_simplex;
}

simplex_handle filtered_complex::insert_simplex(std::span<const vertex_id> vertices,
                                                filtration_value value) {
  if (finalized_) throw std::logic_error("insert_simplex on a finalized complex");
  if (vertices.empty()) throw invalid_simplex("empty vertex list");
  std::vector<vertex_id> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw invalid_simplex("duplicate vertex in simplex " + format_vertices(vertices));

  simplex_handle cur = null_simplex;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    simplex_handle next = child(cur, sorted[i]);
    if (next == null_simplex) {
      next = static_cast<simplex_handle>(nodes_.size());
      nodes_.push_back({sorted[i], cur, infinite_value, static_cast<int>(i), false, {}});
      auto& children = cur == null_simplex ? roots_ : nodes_[cur].children;
      children.insert(find_label(children, sorted[i]), {sorted[i], next});
    }
    cur = next;
  }
  node& n = nodes_[cur];
  if (!n.present) {
    n.present = true;
    n.value = value;
    ++present_count_;
    max_dim_ = std::max(max_dim_, n.dim);
  } else {
    n.value = std::min(n.value, value);
  }
  return cur;
}

std::optional<simplex_handle> filtered_complex::find_sorted(std::span<const vertex_id> sorted) const {
  if (sorted.empty()) return std::nullopt;
  simplex_handle cur = null_simplex;
  for (vertex_id v : sorted) {
    cur = child(cur, v);
    if (cur == null_simplex) return std::nullopt;
  }
  if (!nodes_[cur].present) return std::nullopt;
  return cur;
}

std::optional<simplex_handle> filtered_complex::find(std::span<const vertex_id> vertices) const {
  std::vector<vertex_id> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  return find_sorted(sorted);
}

simplex_handle filtered_complex::handle(std::span<const vertex_id> vertices) const {
  auto h = find(vertices);
  if (!h) throw unknown_simplex("UnknownSimplex: " + format_vertices(vertices));
  return *h;
}

std::vector<vertex_id> filtered_complex::vertices(simplex_handle s) const {
  if (finalized_) {
    auto cached = cached_vertices(s);
    return {cached.begin(), cached.end()};
  }
  node_at(s);
  std::vector<vertex_id> out;
  for (simplex_handle cur = s; cur != null_simplex; cur = nodes_[cur].parent)
    out.push_back(nodes_[cur].label);
  std::reverse(out.begin(), out.end());
  return out;
}

std::span<const vertex_id> filtered_complex::cached_vertices(simplex_handle s) const {
  const node& n = node_at(s);
  return {vertex_pool_.data() + vertex_offset_[s], static_cast<std::size_t>(n.dim + 1)};
}

std::vector<simplex_handle> filtered_complex::simplices() const {
  std::vector<simplex_handle> out;
  out.reserve(present_count_);
  for (simplex_handle s = 0; s < nodes_.size(); ++s)
    if (nodes_[s].present) out.push_back(s);
  return out;
}

void filtered_complex::finalize() {
  if (finalized_) return;

  // Every node is either present or a strict prefix of a present simplex, so
  // checking the codimension-1 faces of present simplices also catches
  // missing path nodes.
  std::vector<vertex_id> verts, face;
  for (simplex_handle s = 0; s < nodes_.size(); ++s) {
    if (!nodes_[s].present || nodes_[s].dim == 0) continue;
    verts = vertices(s);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      face.assign(verts.begin(), verts.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      auto f = find_sorted(face);
      if (!f)
        throw closure_violation("ClosureViolation: simplex " + format_vertices(verts) +
                                " is missing its face " + format_vertices(face));
      if (nodes_[*f].value > nodes_[s].value) {
        std::ostringstream msg;
        msg << "MonotonicityViolation: face " << format_vertices(face) << " has value "
            << nodes_[*f].value << " > " << nodes_[s].value << " of coface "
            << format_vertices(verts);
        throw monotonicity_violation(msg.str());
      }
    }
  }

  vertex_offset_.assign(nodes_.size(), 0);
  vertex_pool_.clear();
  vertex_pool_.reserve(nodes_.size() * static_cast<std::size_t>(max_dim_ + 1));
  for (simplex_handle s = 0; s < nodes_.size(); ++s) {
    vertex_offset_[s] = static_cast<std::uint32_t>(vertex_pool_.size());
    verts = vertices(s);
    vertex_pool_.insert(vertex_pool_.end(), verts.begin(), verts.end());
  }

  count_by_dim_.assign(static_cast<std::size_t>(max_dim_ + 1), 0);
  vertex_id max_label = 0;
  for (const auto& [label, h] : roots_) max_label = std::max(max_label, label);
  neighbors_.assign(roots_.empty() ? 0 : max_label + 1, {});
  for (simplex_handle s = 0; s < nodes_.size(); ++s) {
    ++count_by_dim_[static_cast<std::size_t>(nodes_[s].dim)];
    if (nodes_[s].dim == 1) {
      auto e = cached_vertices(s);
      neighbors_[e[0]].push_back(e[1]);
      neighbors_[e[1]].push_back(e[0]);
    }
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());

  order_.resize(nodes_.size());
  std::iota(order_.begin(), order_.end(), simplex_handle{0});
  finalized_ = true;
  std::sort(order_.begin(), order_.end(), [this](simplex_handle a, simplex_handle b) {
    const node& na = nodes_[a];
    const node& nb = nodes_[b];
    if (na.value != nb.value) return na.value < nb.value;
    if (na.dim != nb.dim) return na.dim < nb.dim;
    auto va = cached_vertices(a);
    auto vb = cached_vertices(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
  });
  position_.assign(nodes_.size(), 0);
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = static_cast<std::uint32_t>(i);
}

std::vector<signed_face> filtered_complex::boundary(simplex_handle s) const {
  require_finalized("boundary");
  auto verts = cached_vertices(s);
  std::vector<signed_face> out;
  if (verts.size() == 1) return out;
  out.reserve(verts.size());
  std::vector<vertex_id> face(verts.size() - 1);
  for (std::size_t j = 0; j < verts.size(); ++j) {
    std::copy(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(j), face.begin());
    std::copy(verts.begin() + static_cast<std::ptrdiff_t>(j) + 1, verts.end(),
              face.begin() + static_cast<std::ptrdiff_t>(j));
    auto f = find_sorted(face);
    out.push_back({*f, (j % 2 == 0) ? 1 : -1});
  }
  return out;
}

std::vector<simplex_handle> filtered_complex::codim1_cofaces(simplex_handle s, value_range slab) const {
  require_finalized("codim1_cofaces");
  auto verts = cached_vertices(s);
  std::vector<simplex_handle> out;
  // A coface s + {u} needs the edge {v, u} for every vertex v of s.
  std::vector<vertex_id> candidates = neighbors_[verts[0]], scratch;
  for (std::size_t i = 1; i < verts.size() && !candidates.empty(); ++i) {
    const auto& adj = neighbors_[verts[i]];
    scratch.clear();
    std::set_intersection(candidates.begin(), candidates.end(), adj.begin(), adj.end(),
                          std::back_inserter(scratch));
    candidates.swap(scratch);
  }
  std::vector<vertex_id> coface(verts.size() + 1);
  for (vertex_id u : candidates) {
    auto pos = std::lower_bound(verts.begin(), verts.end(), u);
    auto split = pos - verts.begin();
    std::copy(verts.begin(), pos, coface.begin());
    coface[static_cast<std::size_t>(split)] = u;
    std::copy(pos, verts.end(), coface.begin() + split + 1);
    auto c = find_sorted(coface);
    if (c && slab.contains(nodes_[*c].value)) out.push_back(*c);
  }
  return out;
}

const std::vector<simplex_handle>& filtered_complex::filtration_order() const {
  require_finalized("filtration_order");
  return order_;
}

std::size_t filtered_complex::position(simplex_handle s) const {
  require_finalized("position");
  node_at(s);
  return position_[s];
}

std::size_t filtered_complex::count(int dim) const {
  if (dim < 0 || dim > max_dim_) return 0;
  if (finalized_) return count_by_dim_[static_cast<std::size_t>(dim)];
  std::size_t n = 0;
  for (const auto& nd : nodes_) n += (nd.present && nd.dim == dim);
  return n;
}

}  // namespace pcoh
