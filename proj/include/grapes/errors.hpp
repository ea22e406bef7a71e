#pragma once

#include <stdexcept>
#include <string>

namespace grapes {

/// Malformed or inconsistent caller input: unknown element, ground mismatch,
/// non-fresh apex and so on. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition on an internal object was broken, e.g. replaying
/// a collapse pair that is not free. Indicates a bug or a forged certificate.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace grapes
