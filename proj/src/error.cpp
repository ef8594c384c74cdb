#include "dyncolor/error.hpp"

namespace dyncolor {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EdgeExists: return "EdgeExists";
    case Errc::EdgeMissing: return "EdgeMissing";
    case Errc::NotARoot: return "NotARoot";
    case Errc::SameTree: return "SameTree";
    case Errc::IsRoot: return "IsRoot";
    case Errc::AlreadyPresent: return "AlreadyPresent";
    case Errc::NotPresent: return "NotPresent";
    case Errc::SameRoot: return "SameRoot";
    case Errc::PaletteExhausted: return "PaletteExhausted";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::AuxVertexInUse: return "AuxVertexInUse";
    case Errc::UnsupportedEvent: return "UnsupportedEvent";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::ContractViolation: return "ContractViolation";
  }
  return "Unknown";
}

}  // namespace dyncolor
