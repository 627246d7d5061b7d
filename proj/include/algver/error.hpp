#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace algver {

// Every failure mode in the library is an Error tagged with a stable code
// string ("DivisionByZero", "PropertyViolation", ...). Tests and the CLI
// dispatch on code(), the what() text carries the witness.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, const std::string& code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace algver
