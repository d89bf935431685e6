#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

// Error categories raised by constructors and predicate entry points.
// Parse-level problems are reported as positioned diagnostics instead
// (see textio.hpp); Error is for API misuse on already-parsed values.
enum class Errc {
  EmptyCarrier,
  EmptyImage,
  OutOfCarrier,
  CarrierTooLarge,
  EmptyOperand,
  CarrierMismatch,
  OrderTooLarge,
  UnknownRelaxation,
  GradeOutOfRange,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyp
