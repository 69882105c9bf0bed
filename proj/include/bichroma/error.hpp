#pragma once

#include <stdexcept>
#include <string>

namespace bichroma {

enum class ErrorKind {
  DegenerateOverlap,
  NotGeneralPosition,
  Monochromatic,
  TooFewPoints,
  InsideHull,
  NoVisibleEdge,
  GeometryViolation,
  DegenerateExtent,
  TooLarge,
  EdgeNotInTree,
  BadSize,
  InvalidInput,
  IoError,
  InternalError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorKind::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorKind::Monochromatic: return "Monochromatic";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::InsideHull: return "InsideHull";
    case ErrorKind::NoVisibleEdge: return "NoVisibleEdge";
    case ErrorKind::GeometryViolation: return "GeometryViolation";
    case ErrorKind::DegenerateExtent: return "DegenerateExtent";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EdgeNotInTree: return "EdgeNotInTree";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit status used by the command-line tool.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Monochromatic:
      return 3;
    case ErrorKind::TooLarge:
      return 4;
    case ErrorKind::DegenerateOverlap:
    case ErrorKind::InsideHull:
    case ErrorKind::NoVisibleEdge:
    case ErrorKind::GeometryViolation:
    case ErrorKind::EdgeNotInTree:
    case ErrorKind::InternalError:
      return 5;
    default:
      return 2;
  }
}

}  // namespace bichroma
