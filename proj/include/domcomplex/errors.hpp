#ifndef DOMCOMPLEX_ERRORS_HPP
#define DOMCOMPLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace domcomplex {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidVertexCount : public Error {
public:
    using Error::Error;
};

class InvalidEdge : public Error {
public:
    using Error::Error;
};

// Raised instead of silently truncating an enumeration or an elimination.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

class UnsupportedSpec : public Error {
public:
    using Error::Error;
};

// A structural lemma the constructions rely on did not hold; this always
// indicates an enumeration bug rather than bad user input.
class ViolatedLemma : public Error {
public:
    using Error::Error;
};

class MatchingConflict : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class VersionError : public FormatError {
public:
    using FormatError::FormatError;
};

} // namespace domcomplex

#endif // DOMCOMPLEX_ERRORS_HPP
