#pragma once

#include <stdexcept>
#include <string>

namespace cardylab {

enum class ErrorKind {
  EmptyFaceSet,
  NotConnected,
  NotSimplyConnected,
  MeshTooCoarse,
  MarksCollide,
  SameMark,
  BoundaryVertex,
  WrongMarkCount,
  TooLarge,
  BoundaryMismatch,
  InvalidBranchSet,
  MarkAtVertex,
  NotAContour,
  MarkOnContour,
  DegenerateAnnulus,
  NonPositiveAspect,
  NotDefined,
  InvalidArgument,
  IoError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cardylab
