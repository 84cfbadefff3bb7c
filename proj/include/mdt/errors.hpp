#pragma once

#include <stdexcept>
#include <string>

namespace mdt {

// Every failure the library can signal, by name. Feasibility guards
// (TooLarge) are kept distinct from usage errors so the CLI can map
// them to different exit codes.
enum class Err {
  DivisionByZero,
  PoleAtOne,
  HalfPowerPresent,
  DenominatorZero,
  GradingMismatch,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  ZeroExponentVector,
  NotAntisymmetric,
  NonIntegralCoefficient,
  UnknownType,
  UnknownGroup,
  DimensionMismatch,
  NotPrimePower,
  TooLarge,
  InsufficientSamples,
  NonIntegerCoefficients,
  MissingKacEntry,
  NotGeneric,
  NotPolynomialInT,
  SerializationOverflow,
  BadInput,
};

const char* err_name(Err e);

class MdtError : public std::runtime_error {
public:
  MdtError(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw MdtError(kind, msg); }

} // namespace mdt
