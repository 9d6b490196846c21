#pragma once

#include <cstdint>

namespace pcoh {

/// Canonical representative of an element of Z_p, always in [0, p).
using field_element = std::uint32_t;

/// The prime field Z_p. Immutable after construction; all operations are
/// pure and take canonical operands.
class prime_field {
 public:
  /// Throws composite_modulus unless p is a prime (p >= 2).
  explicit prime_field(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  field_element add(field_element a, field_element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<field_element>(s >= p_ ? s - p_ : s);
  }
  field_element neg(field_element a) const { return a == 0 ? 0 : p_ - a; }
  field_element sub(field_element a, field_element b) const { return add(a, neg(b)); }
  field_element mul(field_element a, field_element b) const {
    return static_cast<field_element>((std::uint64_t{a} * b) % p_);
  }
  /// Throws division_by_zero on 0.
  field_element inv(field_element a) const;
  field_element div(field_element a, field_element b) const { return mul(a, inv(b)); }

  /// Reduces an arbitrary signed integer into [0, p).
  field_element from_int(std::int64_t v) const;

  friend bool operator==(const prime_field&, const prime_field&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace pcoh
