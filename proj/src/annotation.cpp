#include "pcoh/annotation.hpp"

namespace pcoh {

namespace {

inline void count(std::uint64_t* ops, std::uint64_t n = 1) {
  if (ops) *ops += n;
}

}  // namespace

annotation_vector add_scaled(std::span<const ann_entry> a, field_element lambda,
                             std::span<const ann_entry> b, const prime_field& field,
                             std::uint64_t* ops) {
  annotation_vector out;
  if (lambda == 0) return {a.begin(), a.end()};
  out.reserve(a.size() + b.size());
  const bool unit = lambda == 1;
  auto scaled = [&](field_element c) {
    if (unit) return c;
    count(ops);
    return field.mul(c, lambda);
  };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].row < b[j].row) {
      out.push_back(a[i++]);
    } else if (b[j].row < a[i].row) {
      out.push_back({b[j].row, scaled(b[j].coeff)});
      ++j;
    } else {
      field_element c = field.add(a[i].coeff, scaled(b[j].coeff));
      count(ops);
      if (c != 0) out.push_back({a[i].row, c});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].row, scaled(b[j].coeff)});
  return out;
}

sum_result sum_ann(std::span<const ann_entry> a1, std::span<const ann_entry> a2,
                   const prime_field& field, std::uint64_t* ops) {
  sum_result r{add_scaled(a1, 1, a2, field, ops), std::nullopt};
  if (!r.sum.empty()) r.max_entry = r.sum.back();
  return r;
}

annotation_vector scale_ann(std::span<const ann_entry> a, field_element lambda,
                            const prime_field& field, std::uint64_t* ops) {
  if (lambda == 0) return {};
  annotation_vector out(a.begin(), a.end());
  if (lambda == 1) return out;
  for (auto& e : out) e.coeff = field.mul(e.coeff, lambda);
  count(ops, out.size());
  return out;
}

bool is_canonical(std::span<const ann_entry> a, const prime_field& field) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].coeff == 0 || a[i].coeff >= field.characteristic()) return false;
    if (i > 0 && a[i - 1].row >= a[i].row) return false;
  }
  return true;
}

std::size_t hash_annotation(std::span<const ann_entry> a) {
  // boost::hash_combine style mixing over (row, coeff) pairs
  std::size_t h = a.size();
  for (const auto& e : a) {
    std::size_t v = (std::size_t{e.row} << 32) ^ e.coeff;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace pcoh
