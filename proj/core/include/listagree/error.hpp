#pragma once

#include <stdexcept>
#include <string>

namespace listagree {

enum class ErrorKind {
  MixedDimensions,
  FaceNotInComplex,
  TopDimensionalFace,
  DimensionOutOfRange,
  DimensionTooHigh,
  BaseMismatch,
  NotARepresentationComplex,
  NotACycle,
  CoreNotInFace,
  NotAnEdge,
  NotACocycle,
  LocalWitnessFailed,
  SearchSpaceTooLarge,
  NotGenuine,
  NotACoboundary,
  NoContainingFace,
  InvalidParams,
  NotASimpleCycle,
  PreconditionUnsatisfiable,
  NonpositiveGamma,
  ParseError,
  UnknownFormat,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace listagree
