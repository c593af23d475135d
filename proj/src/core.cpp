#include "wco/core.hpp"

namespace wco {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::PoleAtInput: return "PoleAtInput";
        case ErrorKind::DegenerateResult: return "DegenerateResult";
        case ErrorKind::IdentityMap: return "IdentityMap";
        case ErrorKind::NotSelfMap: return "NotSelfMap";
        case ErrorKind::ConstantMap: return "ConstantMap";
        case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::NotContractive: return "NotContractive";
        case ErrorKind::OutsideDisk: return "OutsideDisk";
        case ErrorKind::SymbolPole: return "SymbolPole";
        case ErrorKind::BadParameterDomain: return "BadParameterDomain";
        case ErrorKind::BlockTooLarge: return "BlockTooLarge";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::DegenerateSymbol: return "DegenerateSymbol";
        case ErrorKind::BranchConditionViolated: return "BranchConditionViolated";
        case ErrorKind::DiscriminantViolated: return "DiscriminantViolated";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wco
