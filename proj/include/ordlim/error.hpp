#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ordlim {

// Library errors carry a coarse kind so the CLI can map them onto exit codes
// (domain/usage -> 2, parse -> 3).
class Error : public std::runtime_error {
 public:
  enum class Kind { domain, parse };

  Error(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(std::string msg) {
  throw Error(Error::Kind::domain, std::move(msg));
}

[[noreturn]] inline void fail_parse(std::string msg) {
  throw Error(Error::Kind::parse, std::move(msg));
}

}  // namespace ordlim
