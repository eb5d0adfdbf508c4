#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInput : Error {
    EmptyInput() : Error("generator list is empty") {}
};

struct NonPositiveGenerator : Error {
    NonPositiveGenerator() : Error("generators must be positive") {}
};

struct ContentNotOne : Error {
    ContentNotOne() : Error("operation requires a semigroup of content 1") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("vector length does not match ambient dimension") {}
};

struct DegreeNotInSemigroup : Error {
    DegreeNotInSemigroup() : Error("degree does not belong to the semigroup") {}
};

struct NotCoprime : Error {
    NotCoprime() : Error("gluing degrees must be coprime") {}
};

struct DegreeIsGenerator : Error {
    DegreeIsGenerator() : Error("degree coincides with a minimal generator") {}
};

struct GeneratorOverlap : Error {
    GeneratorOverlap() : Error("scaled generator lists overlap") {}
};

struct NotMember : Error {
    NotMember() : Error("element does not belong to the semigroup") {}
};

struct NotMinimal : Error {
    NotMinimal() : Error("generator list is not minimal") {}
};

struct CoprimalityFailure : Error {
    CoprimalityFailure() : Error("scaling factor fails the coprimality requirement") {}
};

struct InvalidWeights : Error {
    InvalidWeights() : Error("invalid weight vector") {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("semigroup is not symmetric") {}
};

struct NotThreeGenerated : Error {
    NotThreeGenerated() : Error("semigroup is not minimally 3-generated") {}
};

struct IsSymmetric : Error {
    IsSymmetric() : Error("semigroup is symmetric") {}
};

struct ConstraintViolation : Error {
    ConstraintViolation() : Error("parameter constraints violated") {}
};

struct NotMinimallyFourGenerated : Error {
    NotMinimallyFourGenerated() : Error("semigroup is not minimally 4-generated") {}
};

struct NotPseudoSymmetric : Error {
    NotPseudoSymmetric() : Error("semigroup is not pseudo-symmetric") {}
};

struct DegenerateGluing : Error {
    DegenerateGluing() : Error("gluing degrees must be at least 2") {}
};

}  // namespace sgr
