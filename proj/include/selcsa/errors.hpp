#pragma once

#include <stdexcept>
#include <string>

namespace selcsa {

// Stable error codes surfaced by the CLI as exit codes.
enum class ErrorCode {
    Validation = 1,
    UndeterminedPrime = 2,
    OracleMismatch = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Input fails a structural invariant (bad discriminant, reciprocity
// violation, descriptor inconsistency, malformed config, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(std::string msg)
        : Error(ErrorCode::Validation, std::move(msg)) {}
};

// The Dedekind criterion could not certify maximality at a prime whose
// splitting data is required downstream.
class UndeterminedPrimeError : public Error {
public:
    explicit UndeterminedPrimeError(std::string msg)
        : Error(ErrorCode::UndeterminedPrime, std::move(msg)) {}
};

// The Steinitz oracle cannot be applied (ramified algebra, non-maximal
// local types, or the exact index computation would leave 64-bit range).
class OracleUnavailableError : public Error {
public:
    explicit OracleUnavailableError(std::string msg)
        : Error(ErrorCode::OracleMismatch, std::move(msg)) {}
};

}  // namespace selcsa
