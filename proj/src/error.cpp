#include "waring/error.hpp"

namespace waring {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InexactField: return "InexactField";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotSubCI: return "NotSubCI";
    case ErrorCode::InsufficientDegreeBound: return "InsufficientDegreeBound";
    case ErrorCode::RootNotInField: return "RootNotInField";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::DependentLinearForms: return "DependentLinearForms";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace waring
