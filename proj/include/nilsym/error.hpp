#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilsym {

enum class Errc {
  Parse,
  BadIndex,
  DuplicateBracket,
  NotTwoStep,
  DegenerateMetric,
  DimensionMismatch,
  VectorNotInCenter,
  NotSkew,
  OddDimension,
  NotAutomorphism,
  SelfLoop,
  DuplicateEdge,
  NoEdges,
  UnknownName,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::Parse: return "Parse";
    case Errc::BadIndex: return "BadIndex";
    case Errc::DuplicateBracket: return "DuplicateBracket";
    case Errc::NotTwoStep: return "NotTwoStep";
    case Errc::DegenerateMetric: return "DegenerateMetric";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::VectorNotInCenter: return "VectorNotInCenter";
    case Errc::NotSkew: return "NotSkew";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NoEdges: return "NoEdges";
    case Errc::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nilsym
