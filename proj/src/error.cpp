#include "tanglekit/error.hpp"

namespace tanglekit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotASeparation: return "NotASeparation";
    case ErrorCode::ApexTooLarge: return "ApexTooLarge";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::AlphaTooSmall: return "AlphaTooSmall";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace tanglekit
