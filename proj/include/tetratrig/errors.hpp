#pragma once

#include <stdexcept>
#include <string>

namespace tetratrig {

enum class ErrorKind {
    DegenerateConfiguration,
    PointOffCarrier,
    DegenerateConic,
    DegenerateTriple,
    TangentLine,
    LineInQuadric,
    PointOffQuadric,
    NotInLattice,
    NotARoot,
    NotRealizable,
    NearDegenerate,
    SignSystemInconsistent,
    VectorNotInDomain,
    NotInModuli,
    RoundTripFailure,
    ZeroPoleCollision,
    DegenerateQuadratic,
    NoVerifyingOrder,
    AssignmentAmbiguous,
    NoConsistentAssignment,
    NotEquivalent,
    TooDegenerate,
    NotInComplement,
    NotInFPerp,
    ConsistencyFailure,
    GramMismatch,
    AuxiliaryDegenerate,
    ConcurrencyFailure,
    NonGeneric,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tetratrig
