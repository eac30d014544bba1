#pragma once

#include <stdexcept>
#include <string>

namespace jtlab {

// Malformed partition text.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A brute-force oracle was asked for an instance above its size cap.
struct OracleUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructed object failed its own validity check.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two Monte Carlo trials produced dominance-incomparable Jordan types.
struct IncomparableTrials : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jtlab
