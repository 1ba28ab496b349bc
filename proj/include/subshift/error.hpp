#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subshift {

enum class ErrorKind {
  EmptyWord,
  InvalidSymbol,
  IncompatibleAlphabets,
  MalformedCell,
  InvalidRange,
  DegeneratePeriodic,
  NotCoprime,
  NonPositive,
  Overflow,
  InvalidSpec,
  WrongAlphabet,
  InternalMismatch,
  NotConjugate,
  WindowExhausted,
  MissingBlock,
  DegenerateImage,
  SymbolAbsent,
  PostconditionFailed,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::IncompatibleAlphabets: return "IncompatibleAlphabets";
    case ErrorKind::MalformedCell: return "MalformedCell";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::DegeneratePeriodic: return "DegeneratePeriodic";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::WrongAlphabet: return "WrongAlphabet";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::NotConjugate: return "NotConjugate";
    case ErrorKind::WindowExhausted: return "WindowExhausted";
    case ErrorKind::MissingBlock: return "MissingBlock";
    case ErrorKind::DegenerateImage: return "DegenerateImage";
    case ErrorKind::SymbolAbsent: return "SymbolAbsent";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace subshift
