#include "pcoh/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace pcoh::oracle {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

using sparse_column = std::vector<std::pair<std::size_t, field_element>>;  // (row position, coeff)

// column -= factor * other
void subtract_multiple(sparse_column& column, field_element factor, const sparse_column& other,
                       const prime_field& field) {
  sparse_column out;
  out.reserve(column.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < column.size() || j < other.size()) {
    if (j == other.size() || (i < column.size() && column[i].first < other[j].first)) {
      out.push_back(column[i++]);
    } else if (i == column.size() || other[j].first < column[i].first) {
      out.emplace_back(other[j].first, field.neg(field.mul(factor, other[j].second)));
      ++j;
    } else {
      field_element v = field.sub(column[i].second, field.mul(factor, other[j].second));
      if (v != 0) out.emplace_back(column[i].first, v);
      ++i, ++j;
    }
  }
  column = std::move(out);
}

struct reduction {
  std::vector<std::size_t> killer;  // position -> position of the simplex killing it, or none
  std::vector<bool> positive;       // column reduced to zero
};

reduction reduce_matrix(const filtered_complex& c, const prime_field& field,
                        std::span<const simplex_handle> order) {
  const std::size_t m = order.size();
  std::vector<std::size_t> pos(c.size(), none);
  for (std::size_t i = 0; i < m; ++i) pos[order[i]] = i;

  reduction r{std::vector<std::size_t>(m, none), std::vector<bool>(m, false)};
  std::vector<sparse_column> reduced(m);
  std::vector<std::size_t> pivot_owner(m, none);  // low row -> column

  for (std::size_t j = 0; j < m; ++j) {
    sparse_column col;
    for (const auto& f : c.boundary(order[j])) {
      std::size_t row = pos[f.face];
      if (row == none || row >= j) throw std::invalid_argument("order does not respect inclusion");
      col.emplace_back(row, field.from_int(f.sign));
    }
    std::sort(col.begin(), col.end());
    while (!col.empty() && pivot_owner[col.back().first] != none) {
      const sparse_column& other = reduced[pivot_owner[col.back().first]];
      field_element factor = field.div(col.back().second, other.back().second);
      subtract_multiple(col, factor, other, field);
    }
    if (col.empty()) {
      r.positive[j] = true;
    } else {
      pivot_owner[col.back().first] = j;
      r.killer[col.back().first] = j;
    }
    reduced[j] = std::move(col);
  }
  return r;
}

}  // namespace

persistence_diagram reduce(const filtered_complex& c, const prime_field& field,
                           std::span<const simplex_handle> order, bool emit_zero_length) {
  if (order.size() != c.size()) throw std::invalid_argument("order must list every simplex");
  auto r = reduce_matrix(c, field, order);
  persistence_diagram d;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!r.positive[i]) continue;
    simplex_handle creator = order[i];
    persistence_pair p{c.dimension(creator), c.filtration(creator), infinite_value, creator, std::nullopt};
    if (r.killer[i] != none) {
      p.killer = order[r.killer[i]];
      p.death = c.filtration(*p.killer);
    }
    if (emit_zero_length || p.birth != p.death) d.pairs.push_back(p);
  }
  return d;
}

persistence_diagram reduce(const filtered_complex& c, const prime_field& field, bool emit_zero_length) {
  return reduce(c, field, c.filtration_order(), emit_zero_length);
}

std::vector<std::vector<std::size_t>> betti_profile(const filtered_complex& c, const prime_field& field,
                                                    std::span<const simplex_handle> order) {
  auto r = reduce_matrix(c, field, order);
  std::vector<std::size_t> killed(order.size(), none);  // killer position -> creator position
  for (std::size_t i = 0; i < order.size(); ++i)
    if (r.killer[i] != none) killed[r.killer[i]] = i;

  const auto dims = static_cast<std::size_t>(std::max(c.dimension() + 1, 0));
  std::vector<std::vector<std::size_t>> profile;
  profile.reserve(order.size() + 1);
  std::vector<std::size_t> betti(dims, 0);
  profile.push_back(betti);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (r.positive[i])
      ++betti[static_cast<std::size_t>(c.dimension(order[i]))];
    else
      --betti[static_cast<std::size_t>(c.dimension(order[killed[i]]))];
    profile.push_back(betti);
  }
  return profile;
}

std::vector<std::size_t> betti_numbers(const filtered_complex& c, const prime_field& field,
                                       std::size_t prefix_len) {
  const auto& order = c.filtration_order();
  if (prefix_len > order.size()) throw std::out_of_range("prefix longer than the filtration");
  // Column reduction is prefix-stable: reducing a prefix alone yields the
  // prefix of the full reduction.
  auto prefix = std::span<const simplex_handle>(order).first(prefix_len);
  int top = -1;
  for (simplex_handle s : prefix) top = std::max(top, c.dimension(s));
  auto profile = betti_profile(c, field, order);
  const auto& row = profile[prefix_len];
  return {row.begin(), row.begin() + (top + 1)};
}

}  // namespace pcoh::oracle
