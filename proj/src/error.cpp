#include "bpl/error.hpp"

namespace bpl {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Schema: return "schema";
        case ErrorKind::InvalidExponent: return "invalid-exponent";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Geometry: return "geometry";
        case ErrorKind::PerturbationRequired: return "perturbation-required";
        case ErrorKind::IncompatibleToken: return "incompatible-token";
        case ErrorKind::InvalidConstruction: return "invalid-construction";
        case ErrorKind::TopologicalObstruction: return "topological-obstruction";
        case ErrorKind::AmbiguousSurgery: return "ambiguous-surgery";
        case ErrorKind::StretchRequired: return "stretch-required";
        case ErrorKind::NotCertified: return "not-certified";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::Setup: return "setup";
        case ErrorKind::ReductionNotApplicable: return "reduction-not-applicable";
        case ErrorKind::Discrepancy: return "discrepancy";
    }
    return "unknown";
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Schema:
        case ErrorKind::InvalidExponent:
        case ErrorKind::Precondition:
        case ErrorKind::Unsupported:
        case ErrorKind::Setup:
        case ErrorKind::ReductionNotApplicable:
            return 2;
        case ErrorKind::Geometry:
        case ErrorKind::PerturbationRequired:
        case ErrorKind::IncompatibleToken:
        case ErrorKind::InvalidConstruction:
        case ErrorKind::TopologicalObstruction:
        case ErrorKind::AmbiguousSurgery:
        case ErrorKind::StretchRequired:
            return 3;
        case ErrorKind::NotCertified: return 4;
        case ErrorKind::Discrepancy: return 5;
    }
    return 1;
}

}  // namespace bpl
