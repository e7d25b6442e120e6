#pragma once

#include <stdexcept>
#include <string>

namespace phca {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain validation failures (bad instances of core types).
struct ValidationError : Error {
    using Error::Error;
};

struct InvalidBylineError : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidCategoryError : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidCitationsError : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptyEmploymentError : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidSalaryError : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidConfigError : ValidationError {
    using ValidationError::ValidationError;
};

// Percentile / cohort errors.
struct MembershipError : Error {
    using Error::Error;
};
struct EmptyCohortError : Error {
    using Error::Error;
};
struct MissingCohortError : Error {
    using Error::Error;
};

// Cost and scoring errors.
struct MissingSalaryError : Error {
    using Error::Error;
};
struct ZeroCostError : Error {
    using Error::Error;
};
struct NoHcaInSdsError : Error {
    using Error::Error;
};

// Ranking / comparison errors.
struct InvalidRankError : Error {
    using Error::Error;
};
struct InvalidPairingError : Error {
    using Error::Error;
};
struct TooFewValuesError : Error {
    using Error::Error;
};
struct DegenerateDistributionError : Error {
    using Error::Error;
};

// Ingestion errors.
struct ParseError : Error {
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          file_name(file),
          line_number(line) {}
    std::string file_name;
    std::size_t line_number;
};
struct ReferentialError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace phca
