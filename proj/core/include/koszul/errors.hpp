#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

// Failure categories, mapped onto process exit codes by the CLI driver.
enum class ErrorKind {
  Usage,          // bad arguments, violated preconditions     -> exit 1
  Parse,          // malformed input text                      -> exit 2
  BoundExceeded,  // certified bounds too small for the query  -> exit 3
  InternalCheck,  // a redundant cross-check disagreed         -> exit 4
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error usage_error(const std::string& what) {
  return Error(ErrorKind::Usage, what);
}
inline Error parse_error(const std::string& what) {
  return Error(ErrorKind::Parse, what);
}
inline Error bound_error(const std::string& what) {
  return Error(ErrorKind::BoundExceeded, what);
}
inline Error internal_error(const std::string& what) {
  return Error(ErrorKind::InternalCheck, "internal cross-check failed: " + what);
}

}  // namespace koszul
