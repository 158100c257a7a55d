#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

enum class Errc {
  IndexOutOfRange,
  ZeroVertices,
  NegativeMultiplicity,
  TooLarge,
  TooManyVertices,
  Overflow,
  NotSquare,
  ShapeMismatch,
  NoSuchEdge,
  RangeIsSink,
  LoopShiftUnsupported,
  UnknownCommand,
  BadGraphFile,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroVertices: return "ZeroVertices";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooManyVertices: return "TooManyVertices";
    case Errc::Overflow: return "Overflow";
    case Errc::NotSquare: return "NotSquare";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::RangeIsSink: return "RangeIsSink";
    case Errc::LoopShiftUnsupported: return "LoopShiftUnsupported";
    case Errc::UnknownCommand: return "UnknownCommand";
    case Errc::BadGraphFile: return "BadGraphFile";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lpa
