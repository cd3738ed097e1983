// Typed error codes shared by all gbh components.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbh {

// Every failure carries a stable machine-readable code ("OddOrdinal",
// "BadStem", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

// Raised when a query needs a context flag or hypothesis that was not
// supplied; lists the missing flags so callers can report them.
class MissingAssumption : public Error {
 public:
  explicit MissingAssumption(std::vector<std::string> missing)
      : Error("MissingAssumption", join(missing)), missing_(std::move(missing)) {}

  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) {
      if (!s.empty()) s += ", ";
      s += x;
    }
    return s;
  }
  std::vector<std::string> missing_;
};

}  // namespace gbh
