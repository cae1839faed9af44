#include "lbr/errors.hpp"

namespace lbr {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::OutsideDomain: return "OutsideDomain";
        case ErrorKind::IdenticallyZeroDenominator: return "IdenticallyZeroDenominator";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::IncompatibleTowers: return "IncompatibleTowers";
        case ErrorKind::ConstantArc: return "ConstantArc";
        case ErrorKind::UnboundedArc: return "UnboundedArc";
        case ErrorKind::ArcInsideIndeterminacy: return "ArcInsideIndeterminacy";
        case ErrorKind::NotLocallyBounded: return "NotLocallyBounded";
        case ErrorKind::NotIndeterminate: return "NotIndeterminate";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::DepthExceeded: return "DepthExceeded";
        case ErrorKind::Exhausted: return "Exhausted";
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}  // namespace lbr
