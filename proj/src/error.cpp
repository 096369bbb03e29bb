#include "forest/error.hpp"

namespace forest {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::GenerationTimeout: return "GenerationTimeout";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

}  // namespace forest
