#pragma once

#include <stdexcept>
#include <string>

namespace wardrop {

enum class ErrorCode {
  // network construction
  DanglingEndpoint,
  SelfLoop,
  DuplicateEdgeId,
  EmptyDemand,
  InvalidParameter,
  // tntp / sidecar / config parsing
  MalformedHeader,
  RowArityError,
  NonPositiveCapacity,
  NonPositiveFreeTime,
  MalformedOriginBlock,
  NegativeDemand,
  UnresolvedSelector,
  AmbiguousSelector,
  ZeroGammaBpr,
  ConfigError,
  IoError,
  // link costs / oracle / solver
  RegimeMismatch,
  DomainError,
  ZeroSubgradient,
  UnreachableDestination,
  // reference oracle
  PathExplosion,
  RegimeError,
  InfeasiblePathFlows,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::EmptyDemand: return "EmptyDemand";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::RowArityError: return "RowArityError";
    case ErrorCode::NonPositiveCapacity: return "NonPositiveCapacity";
    case ErrorCode::NonPositiveFreeTime: return "NonPositiveFreeTime";
    case ErrorCode::MalformedOriginBlock: return "MalformedOriginBlock";
    case ErrorCode::NegativeDemand: return "NegativeDemand";
    case ErrorCode::UnresolvedSelector: return "UnresolvedSelector";
    case ErrorCode::AmbiguousSelector: return "AmbiguousSelector";
    case ErrorCode::ZeroGammaBpr: return "ZeroGammaBpr";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroSubgradient: return "ZeroSubgradient";
    case ErrorCode::UnreachableDestination: return "UnreachableDestination";
    case ErrorCode::PathExplosion: return "PathExplosion";
    case ErrorCode::RegimeError: return "RegimeError";
    case ErrorCode::InfeasiblePathFlows: return "InfeasiblePathFlows";
  }
  return "UnknownError";
}

// All library failures surface as wardrop::Error carrying a machine-checkable
// code plus a human-readable message naming the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace wardrop
