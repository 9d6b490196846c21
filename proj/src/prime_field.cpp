#include "pcoh/prime_field.hpp"

#include <limits>
#include <string>

#include "pcoh/errors.hpp"

namespace pcoh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

prime_field::prime_field(std::uint64_t p) : p_(0) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
    throw composite_modulus("CompositeModulus: " + std::to_string(p) +
                            " is not a prime, Z_" + std::to_string(p) + " is not a field");
  p_ = static_cast<std::uint32_t>(p);
}

field_element prime_field::inv(field_element a) const {
  if (a == 0) throw division_by_zero("DivisionByZero: inverse of 0 in Z_" + std::to_string(p_));
  // extended Euclid on (a, p); only the coefficient of a is tracked
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  return from_int(t0);
}

field_element prime_field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<field_element>(r);
}

}  // namespace pcoh
