#ifndef TAUTHEIGHT_ERRORS_HPP
#define TAUTHEIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tautheight {

/// Caller supplied arguments that violate an operation's preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested computation exceeds the supported enumeration envelope.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result that the theory rules out (unexpected minimal graph, G <= 0, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tautheight

#endif  // TAUTHEIGHT_ERRORS_HPP
