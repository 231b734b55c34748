#ifndef MHA_ERRORS_HPP
#define MHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mha {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent structure data: token collisions, non-normal subgroups,
// window mismatches, non-idempotent multipliers where one is required.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The instance lacks a capability an operation needs (non-regular antipode,
// no right-finiteness, no local-unit candidates).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A linear system that has to be solved is inconsistent.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

// A table-backed map was evaluated outside its declared window.
class WindowError : public Error {
 public:
  using Error::Error;
};

// A construction's preconditions failed; the message names the failing check.
class RejectedInput : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of candidates before deciding.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

} // namespace mha

#endif // MHA_ERRORS_HPP
