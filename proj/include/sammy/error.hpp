#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sammy {

enum class ErrorKind {
  SizeLimit,
  SourceTargetMismatch,
  SymbolicCategory,
  NoLimit,
  NoKanExtension,
  NoKanLifting,
  NoMediator,
  NonUnique,
  PossiblyInfinite,
  ValidationFailed,
  KindError,
  SyntaxError,
  UnknownOperation,
  DuplicateLabel,
  ReturnNotLast,
  UndefinedLabel,
  UnboundVariable,
  StepLimit,
  InputMismatch,
  BoundaryHit,
  NoRule,
  NoWitness,
  Format,
};

inline std::string_view errorName(ErrorKind k) {
  switch (k) {
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::SymbolicCategory: return "SymbolicCategory";
    case ErrorKind::NoLimit: return "NoLimit";
    case ErrorKind::NoKanExtension: return "NoKanExtension";
    case ErrorKind::NoKanLifting: return "NoKanLifting";
    case ErrorKind::NoMediator: return "NoMediator";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::PossiblyInfinite: return "PossiblyInfinite";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::KindError: return "KindError";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownOperation: return "UnknownOperation";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ReturnNotLast: return "ReturnNotLast";
    case ErrorKind::UndefinedLabel: return "UndefinedLabel";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::StepLimit: return "StepLimit";
    case ErrorKind::InputMismatch: return "InputMismatch";
    case ErrorKind::BoundaryHit: return "BoundaryHit";
    case ErrorKind::NoRule: return "NoRule";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(errorName(kind)) + ": " + what), kind_(kind), message_(what) {}
  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

/// Caps applied by every category constructor. Functor-category and cone
/// enumeration are exponential, so everything that tabulates checks these.
struct Limits {
  std::size_t maxObjects = 64;
  std::size_t maxMorphisms = 512;
  std::size_t saturationBound = 32;
  /// Above this many candidate (H, beta) pairs the exhaustive Kan verifier
  /// is skipped and only the pointwise certificate is checked.
  std::size_t exhaustiveVerifyCap = 20000;
};

namespace detail {
inline Limits& currentLimits() {
  thread_local Limits limits;
  return limits;
}
}  // namespace detail

inline const Limits& limits() { return detail::currentLimits(); }

/// Installs limits for the current thread until destroyed.
class LimitScope {
 public:
  explicit LimitScope(const Limits& l) : saved_(detail::currentLimits()) {
    detail::currentLimits() = l;
  }
  ~LimitScope() { detail::currentLimits() = saved_; }
  LimitScope(const LimitScope&) = delete;
  LimitScope& operator=(const LimitScope&) = delete;

 private:
  Limits saved_;
};

inline void checkSize(std::size_t objects, std::size_t morphisms, std::string_view what) {
  const auto& l = limits();
  if (objects > l.maxObjects || morphisms > l.maxMorphisms) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " needs " + std::to_string(objects) +
                                          " objects / " + std::to_string(morphisms) +
                                          " morphisms (cap " + std::to_string(l.maxObjects) + " / " +
                                          std::to_string(l.maxMorphisms) + ")");
  }
}

}  // namespace sammy
