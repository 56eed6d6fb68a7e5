#pragma once

#include <stdexcept>
#include <string>

namespace bpl {

enum class ErrorKind {
    Schema,
    InvalidExponent,
    Precondition,
    Geometry,
    PerturbationRequired,
    IncompatibleToken,
    InvalidConstruction,
    TopologicalObstruction,
    AmbiguousSurgery,
    StretchRequired,
    NotCertified,
    Unsupported,
    Setup,
    ReductionNotApplicable,
    Discrepancy,
};

const char* kind_name(ErrorKind k);
int exit_code(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bpl
