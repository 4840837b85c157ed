#include "qcox/error.hpp"

namespace qcox {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::NotAcyclic: return "NotAcyclic";
        case ErrorKind::LoopAtVertex: return "LoopAtVertex";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::InvalidVertex: return "InvalidVertex";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::RelationsPresent: return "RelationsPresent";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace qcox
