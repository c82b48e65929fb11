#pragma once

#include <stdexcept>
#include <string>

namespace markoff {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cofactor resisted factoring within the configured budget. Order
// analytics are unavailable for this modulus; hashing is unaffected.
struct FactorizationError : Error {
    using Error::Error;
};

// No maximal bridge coordinate was found between two cage planes.
struct NoBridgeError : Error {
    using Error::Error;
};

// Breadth-first fallback exhausted its depth cap.
struct DepthExhaustedError : Error {
    using Error::Error;
};

// Bounded word conversion between the two graphs failed.
struct ConversionError : Error {
    using Error::Error;
};

// A replayed word did not connect the expected endpoints.
struct CertificateMismatchError : Error {
    using Error::Error;
};

// Input triple does not satisfy the Markoff equation.
struct NonMarkoffError : Error {
    using Error::Error;
};

// Requested enumeration exceeds the configured resource cap.
struct ResourceError : Error {
    using Error::Error;
};

}  // namespace markoff
