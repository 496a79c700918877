#pragma once

#include <stdexcept>
#include <string>

namespace dp1 {

// Failure classes are semantic: singular axes and singular steps mark
// confinement entry points and must stay distinguishable from plain
// argument errors downstream.
enum class Errc {
  invalid_argument,
  parse_error,
  singular_axis,
  singular_step,
  plane_at_infinity,
  negative_input,
  complex_root,
  not_genuine,
  insufficient_length,
  quadrature_non_convergence,
  no_interior_minimum,
  singular_family_member,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dp1
