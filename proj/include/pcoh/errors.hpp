#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcoh {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, invalid parameters, ill-formed complexes.
class input_error : public error {
 public:
  using error::error;
};

// Broken internal contract: misuse of the annotation matrix or engine.
class invariant_violation : public error {
 public:
  using error::error;
};

class composite_modulus : public input_error {
 public:
  using input_error::input_error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

class invalid_simplex : public input_error {
 public:
  using input_error::input_error;
};

class closure_violation : public input_error {
 public:
  using input_error::input_error;
};

class monotonicity_violation : public input_error {
 public:
  using input_error::input_error;
};

class dimension_mismatch : public input_error {
 public:
  using input_error::input_error;
};

class parse_error : public input_error {
 public:
  parse_error(const std::string& source, std::size_t line, const std::string& what)
      : input_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class unknown_simplex : public invariant_violation {
 public:
  using invariant_violation::invariant_violation;
};

class slot_already_assigned : public invariant_violation {
 public:
  using invariant_violation::invariant_violation;
};

class unassigned_slot : public invariant_violation {
 public:
  using invariant_violation::invariant_violation;
};

class zero_annotation : public invariant_violation {
 public:
  using invariant_violation::invariant_violation;
};

class missing_face : public invariant_violation {
 public:
  using invariant_violation::invariant_violation;
};

class slab_not_relatively_closed : public invariant_violation {
 public:
  using invariant_violation::invariant_violation;
};

}  // namespace pcoh
