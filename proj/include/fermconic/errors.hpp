#pragma once

#include <stdexcept>
#include <string>

namespace fermconic {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing values from incompatible domains (different moduli, variable
// lists or extension data), or referencing an unknown variable.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Exact division failed; `witness` describes the nonzero remainder.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg, std::string witness = {})
        : Error(msg), witness(std::move(witness)) {}
    std::string witness;
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

// A construction that requires S20 != 0 and S30 != 0 (or a nonzero
// elimination minor) was attempted on the degenerate locus.
struct DegenerateExtension : Error {
    explicit DegenerateExtension(const std::string& msg) : Error(msg) {}
};

// g1(P) vanishes identically; the d-elimination needs the alternate branch.
struct DegeneratePencil : Error {
    explicit DegeneratePencil(const std::string& msg) : Error(msg) {}
};

// Point lies in the base locus of the m-map.
struct BaseLocusError : Error {
    explicit BaseLocusError(const std::string& msg) : Error(msg) {}
};

// A claimed factorization does not multiply back; carries the difference.
struct CertificateFailure : Error {
    explicit CertificateFailure(const std::string& msg, std::string difference = {})
        : Error(msg), difference(std::move(difference)) {}
    std::string difference;
};

struct PrimeTooLarge : Error {
    explicit PrimeTooLarge(const std::string& msg) : Error(msg) {}
};

// Oracle and symbolic solution sets disagree; carries a replay payload.
struct AgreementFailure : Error {
    explicit AgreementFailure(const std::string& msg, std::string instance_json = {})
        : Error(msg), instance_json(std::move(instance_json)) {}
    std::string instance_json;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace fermconic
