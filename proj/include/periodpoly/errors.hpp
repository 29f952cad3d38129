#ifndef PERIODPOLY_ERRORS_HPP
#define PERIODPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace periodpoly {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorClass {
    Domain,         // argument outside the mathematical domain
    Overflow,       // result exceeds the representable range
    Precision,      // requested accuracy cannot be met with the given data
    Budget,         // a configured resource cap (e.g. truncation length) was hit
    Parse,          // malformed input document
    Schema,         // well-formed document missing required structure
    Gap,            // coefficient list has a hole
    NotFound,       // remote object does not exist
    Network,        // transport failure
    InsufficientData,
    IllConditioned, // linear solve too degenerate to trust
    Convergence,    // iteration failed to converge
    Branch,         // half-integer power branch inconsistency detected
    Filesystem,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass cls() const { return cls_; }

private:
    ErrorClass cls_;
};

inline const char* error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::Domain: return "domain";
        case ErrorClass::Overflow: return "overflow";
        case ErrorClass::Precision: return "precision";
        case ErrorClass::Budget: return "budget";
        case ErrorClass::Parse: return "parse";
        case ErrorClass::Schema: return "schema";
        case ErrorClass::Gap: return "gap";
        case ErrorClass::NotFound: return "not-found";
        case ErrorClass::Network: return "network";
        case ErrorClass::InsufficientData: return "insufficient-data";
        case ErrorClass::IllConditioned: return "ill-conditioned";
        case ErrorClass::Convergence: return "convergence";
        case ErrorClass::Branch: return "branch";
        case ErrorClass::Filesystem: return "filesystem";
    }
    return "unknown";
}

}  // namespace periodpoly

#endif
