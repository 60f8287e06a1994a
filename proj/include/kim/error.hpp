#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kim {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  UnknownFamily,
  BadParams,
  ImproperColoring,
  ShapeMismatch,
  ParseError,
  NotATree,
  MalformedTree,
  PreconditionViolated,
  TooLarge,
  BaseNotFound,
  BadK,
  OutOfDomain,
  // The codes below signal a broken internal invariant rather than bad input.
  InternalError,
  NotAClique,
  LiftFailed,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BaseNotFound: return "BaseNotFound";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::LiftFailed: return "LiftFailed";
  }
  return "Unknown";
}

/// True for codes that indicate a bug in the library rather than bad input.
constexpr bool is_internal(ErrorCode c) {
  return c == ErrorCode::InternalError || c == ErrorCode::NotAClique ||
         c == ErrorCode::LiftFailed;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kim
