#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperforge {

enum class ErrorKind {
  kEmptyEntry,
  kDimensionMismatch,
  kNoOrder,
  kNotCompatible,
  kEmptyOperand,
  kNotAssociative,
  kEmptySubset,
  kCarrierMismatch,
  kInvalidGrid,
  kNotACongruence,
  kCarrierTooLarge,
  kBudgetExceeded,
  kParse,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperforge
