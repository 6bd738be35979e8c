#include "tetratrig/errors.hpp"

namespace tetratrig {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorKind::PointOffCarrier: return "PointOffCarrier";
        case ErrorKind::DegenerateConic: return "DegenerateConic";
        case ErrorKind::DegenerateTriple: return "DegenerateTriple";
        case ErrorKind::TangentLine: return "TangentLine";
        case ErrorKind::LineInQuadric: return "LineInQuadric";
        case ErrorKind::PointOffQuadric: return "PointOffQuadric";
        case ErrorKind::NotInLattice: return "NotInLattice";
        case ErrorKind::NotARoot: return "NotARoot";
        case ErrorKind::NotRealizable: return "NotRealizable";
        case ErrorKind::NearDegenerate: return "NearDegenerate";
        case ErrorKind::SignSystemInconsistent: return "SignSystemInconsistent";
        case ErrorKind::VectorNotInDomain: return "VectorNotInDomain";
        case ErrorKind::NotInModuli: return "NotInModuli";
        case ErrorKind::RoundTripFailure: return "RoundTripFailure";
        case ErrorKind::ZeroPoleCollision: return "ZeroPoleCollision";
        case ErrorKind::DegenerateQuadratic: return "DegenerateQuadratic";
        case ErrorKind::NoVerifyingOrder: return "NoVerifyingOrder";
        case ErrorKind::AssignmentAmbiguous: return "AssignmentAmbiguous";
        case ErrorKind::NoConsistentAssignment: return "NoConsistentAssignment";
        case ErrorKind::NotEquivalent: return "NotEquivalent";
        case ErrorKind::TooDegenerate: return "TooDegenerate";
        case ErrorKind::NotInComplement: return "NotInComplement";
        case ErrorKind::NotInFPerp: return "NotInFPerp";
        case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
        case ErrorKind::GramMismatch: return "GramMismatch";
        case ErrorKind::AuxiliaryDegenerate: return "AuxiliaryDegenerate";
        case ErrorKind::ConcurrencyFailure: return "ConcurrencyFailure";
        case ErrorKind::NonGeneric: return "NonGeneric";
    }
    return "Unknown";
}

}  // namespace tetratrig
