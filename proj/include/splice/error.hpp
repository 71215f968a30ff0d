#pragma once

#include <stdexcept>
#include <string>

namespace splice {

enum class errc {
  invalid_parameter,
  domain_violation,
  out_of_range,
  unsupported,
  hypothesis_violation,
  out_of_theorem_range,
  invalid_spec,
  invalid_matrix,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Process exit code a failure maps to at the tool boundary: violations of a
// theorem hypothesis are distinct from input or usage problems.
inline int exit_code_for(errc c) {
  switch (c) {
    case errc::hypothesis_violation:
    case errc::out_of_theorem_range:
    case errc::domain_violation:
      return 2;
    default:
      return 1;
  }
}

}  // namespace splice
