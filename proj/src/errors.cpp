#include "pa/errors.hpp"

namespace pa {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Cycle: return "CYCLE";
    case ErrorCode::UnknownElement: return "UNKNOWN_ELEMENT";
    case ErrorCode::DuplicateId: return "DUPLICATE_ID";
    case ErrorCode::EmptyResult: return "EMPTY_RESULT";
    case ErrorCode::BadSize: return "BAD_SIZE";
    case ErrorCode::UnknownFacet: return "UNKNOWN_FACET";
    case ErrorCode::UnknownNode: return "UNKNOWN_NODE";
    case ErrorCode::NotABuildingSet: return "NOT_A_BUILDING_SET";
    case ErrorCode::LabelClash: return "LABEL_CLASH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::NotATube: return "NOT_A_TUBE";
    case ErrorCode::ComponentNotTube: return "COMPONENT_NOT_TUBE";
    case ErrorCode::NoSuchFace: return "NO_SUCH_FACE";
    case ErrorCode::ValidationFailed: return "VALIDATION_FAILED";
    case ErrorCode::LabelMismatch: return "LABEL_MISMATCH";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

}  // namespace pa
