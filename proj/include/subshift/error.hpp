// error.hpp -- error taxonomy shared by all modules
#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

enum class ErrorKind {
  InvalidInput,
  NonPrimitive,
  NoSeedLetter,
  HorizonExceeded,
  NotAFactor,
  Incomplete,
  NotAdmissible,
  OddOrder,
  OrderMismatch,
  BaseMismatch,
  Disconnected,
  UnknownEdge,
  NotALoop,
  EmptyGraph,
};

const char* to_string(ErrorKind kind);

/// Single exception type carrying a machine-readable kind and, where it
/// helps the caller (NotAdmissible, code witnesses), the offending word.
class SubshiftError : public std::runtime_error {
 public:
  SubshiftError(ErrorKind kind, const std::string& msg, std::string witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

  /// Input-validation errors map to CLI exit code 2, computation errors to 1.
  bool is_validation() const {
    return kind_ == ErrorKind::InvalidInput || kind_ == ErrorKind::NonPrimitive ||
           kind_ == ErrorKind::NoSeedLetter;
  }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace subshift
