#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ciflie {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The modulus passed to a field constructor is not prime.
class NotPrime : public Error {
public:
    explicit NotPrime(std::int64_t p)
        : Error("modulus " + std::to_string(p) + " is not prime"), p(p) {}
    std::int64_t p;
};

/// A Lie superalgebra axiom failed on a basis tuple.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::string witness)
        : Error("axiom violation (" + axiom + "): " + witness),
          axiom(std::move(axiom)),
          witness(std::move(witness)) {}
    std::string axiom;   // "grading", "super-skew-symmetry", "super-jacobi"
    std::string witness; // human-readable basis tuple
};

/// An exhaustive loop would exceed the configured universe cap.
class UniverseTooLarge : public Error {
public:
    UniverseTooLarge(std::uint64_t size, std::uint64_t cap)
        : Error("universe has " + std::to_string(size) +
                " elements, exceeding the cap of " + std::to_string(cap)),
          size(size),
          cap(cap) {}
    std::uint64_t size;
    std::uint64_t cap;
};

/// Exhaustive table enumeration would exceed the search-space cap.
class SearchSpaceTooLarge : public Error {
public:
    SearchSpaceTooLarge(std::uint64_t size, std::uint64_t cap)
        : Error("enumeration space has " + std::to_string(size) +
                " tables, exceeding the cap of " + std::to_string(cap)),
          size(size),
          cap(cap) {}
    std::uint64_t size;
    std::uint64_t cap;
};

/// The sum of two tables was requested for a pair that is not
/// pairwise homogeneous.
class NotHomogeneousPair : public Error {
public:
    explicit NotHomogeneousPair(const std::string& detail)
        : Error("operands are not pairwise homogeneous: " + detail) {}
};

/// No proper crisp substructure exists but a longer chain was requested.
class EmptyChain : public Error {
public:
    explicit EmptyChain(const std::string& detail)
        : Error("no proper crisp substructure available: " + detail) {}
};

/// Two operands live over different ambient algebras.
class AmbientMismatch : public Error {
public:
    explicit AmbientMismatch(const std::string& detail)
        : Error("ambient algebra mismatch: " + detail) {}
};

/// Vector/matrix dimensions or field moduli do not line up.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& detail)
        : Error("dimension mismatch: " + detail) {}
};

/// A document or value failed to parse.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& detail)
        : Error("parse error: " + detail) {}
};

} // namespace ciflie
