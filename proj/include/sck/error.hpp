#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sck {

/// Error with a stable machine-readable code ("CycleDetected", "OutOfRange", ...)
/// next to the human-readable message. The CLI maps codes to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

}  // namespace sck
