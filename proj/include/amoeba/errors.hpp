#pragma once

#include <stdexcept>
#include <string>

namespace amoeba {

enum class Errc {
  ZeroColumn,
  InvalidParams,
  RankZero,
  GroundTooLarge,
  Loops,
  LoopDetected,
  EmptyMember,
  SupportMismatch,
  NotSubsetOfB,
  BTooLarge,
  CertificationFailed,
  RankDeficientInput,
  LatticeViolation,
  ParseError,
  Internal,
};

/// Library error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroColumn: return "ZeroColumn";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::RankZero: return "RankZero";
    case Errc::GroundTooLarge: return "GroundTooLarge";
    case Errc::Loops: return "Loops";
    case Errc::LoopDetected: return "LoopDetected";
    case Errc::EmptyMember: return "EmptyMember";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::NotSubsetOfB: return "NotSubsetOfB";
    case Errc::BTooLarge: return "BTooLarge";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::RankDeficientInput: return "RankDeficientInput";
    case Errc::LatticeViolation: return "LatticeViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace amoeba
