#pragma once

#include <stdexcept>
#include <string>

namespace isocut {

/// Caller supplied something outside an operation's domain (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal invariant tripped (CLI exit code 3).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

#define ISOCUT_ENSURE(cond, msg)                                              \
  do {                                                                        \
    if (!(cond)) throw ::isocut::ContractViolation(std::string(msg) + " [" #cond "]"); \
  } while (0)

}  // namespace isocut
