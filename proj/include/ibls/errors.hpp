#pragma once

#include <stdexcept>
#include <string>

namespace ibls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct SingularTriangular : Error {
    using Error::Error;
};

struct NumericalBreakdown : Error {
    using Error::Error;
};

// Data ingestion errors.
struct ParseError : Error {
    using Error::Error;
};

struct RaggedRows : ParseError {
    using ParseError::ParseError;
};

struct BadMagic : ParseError {
    using ParseError::ParseError;
};

struct CountMismatch : ParseError {
    using ParseError::ParseError;
};

struct TruncatedFile : ParseError {
    using ParseError::ParseError;
};

struct ScheduleExceedsData : Error {
    using Error::Error;
};

}  // namespace ibls
