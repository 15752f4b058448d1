#pragma once

#include <stdexcept>
#include <string>

namespace nevwb {

enum class ErrorKind {
    InvalidInput,
    Parse,
    Coprimality,
    InternalContradiction,
    NonConvergence,
    NumericDomain,
    NonProperIntersection,
    Io,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Coprimality: return "CoprimalityError";
        case ErrorKind::InternalContradiction: return "InternalContradiction";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::NumericDomain: return "NumericDomain";
        case ErrorKind::NonProperIntersection: return "NonProperIntersection";
        case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

}  // namespace nevwb
