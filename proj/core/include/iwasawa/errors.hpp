#pragma once

#include <stdexcept>
#include <string>

namespace iwasawa {

// Base class for every failure the library reports deliberately.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by a value indistinguishable from zero") : Error(w) {}
};

// A result would carry fewer certified digits than the configured floor, or a
// certificate (rank, elementary divisor, length) cannot be pinned down at the
// working precision.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w = "precision exhausted") : Error(w) {}
};

struct NotASquare : Error {
    explicit NotASquare(const std::string& w = "no square root with the given residue") : Error(w) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& w = "series has constant term zero") : Error(w) {}
};

struct IndeterminateAtPrecision : Error {
    explicit IndeterminateAtPrecision(const std::string& w = "object is indistinguishable from zero at working precision") : Error(w) {}
};

struct PoleAtZero : Error {
    explicit PoleAtZero(const std::string& w = "fraction has a pole at T = 0; use the leading-term machinery") : Error(w) {}
};

struct PoleAtOne : Error {
    explicit PoleAtOne(const std::string& w = "p-adic zeta function has a pole at s = 1") : Error(w) {}
};

struct NotAComplex : Error {
    explicit NotAComplex(const std::string& w = "differentials do not square to zero") : Error(w) {}
};

struct NotTorsion : Error {
    explicit NotTorsion(const std::string& w = "complex is not acyclic over the fraction field") : Error(w) {}
};

struct NotSemisimpleOverR : Error {
    explicit NotSemisimpleOverR(const std::string& w = "T does not annihilate the cohomology over the local ring") : Error(w) {}
};

struct NotSemisimpleAtRho : Error {
    explicit NotSemisimpleAtRho(const std::string& w = "twisted complex is not semisimple") : Error(w) {}
};

struct InconsistentDims : Error {
    explicit InconsistentDims(const std::string& w = "invariant dimensions are inconsistent") : Error(w) {}
};

struct MismatchBeyondPrecision : Error {
    explicit MismatchBeyondPrecision(const std::string& w = "independent routes disagree beyond precision") : Error(w) {}
};

struct UnsupportedCharacterOrder : Error {
    explicit UnsupportedCharacterOrder(const std::string& w = "character order not supported for this prime") : Error(w) {}
};

struct MissingComponent : Error {
    explicit MissingComponent(const std::string& w = "no component for the requested character") : Error(w) {}
};

struct UnsupportedPrime : Error {
    explicit UnsupportedPrime(const std::string& w = "prime not supported for this field") : Error(w) {}
};

struct Disagreement : Error {
    explicit Disagreement(const std::string& w = "checked identity fails beyond certified digits") : Error(w) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& w = "limit estimate did not stabilize") : Error(w) {}
};

struct PoleWindowTooSmall : Error {
    explicit PoleWindowTooSmall(const std::string& w = "evaluation window too small to resolve the pole") : Error(w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w = "malformed input") : Error(w) {}
};

}  // namespace iwasawa
