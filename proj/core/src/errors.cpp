#include "posetmorse/errors.hpp"

namespace posetmorse {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateElement: return "DuplicateElement";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::CoverCycle: return "CoverCycle";
        case ErrorCode::RedundantCover: return "RedundantCover";
        case ErrorCode::NotGraded: return "NotGraded";
        case ErrorCode::EmptyComplex: return "EmptyComplex";
        case ErrorCode::NotAComplex: return "NotAComplex";
        case ErrorCode::NotInfiniteCyclic: return "NotInfiniteCyclic";
        case ErrorCode::NotACover: return "NotACover";
        case ErrorCode::NotCellular: return "NotCellular";
        case ErrorCode::NotMorse: return "NotMorse";
        case ErrorCode::InadmissiblePair: return "InadmissiblePair";
        case ErrorCode::SolveFailure: return "SolveFailure";
        case ErrorCode::ChainRuleViolation: return "ChainRuleViolation";
        case ErrorCode::StabilizationOverrun: return "StabilizationOverrun";
        case ErrorCode::BasisDegenerate: return "BasisDegenerate";
        case ErrorCode::DegenerateStage: return "DegenerateStage";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::Usage: return "Usage";
    }
    return "Unknown";
}

}  // namespace posetmorse
