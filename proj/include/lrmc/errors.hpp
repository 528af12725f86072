#pragma once

#include <stdexcept>
#include <string>

namespace lrmc {

// Preconditioner or least-squares system failed its symmetric factorization.
// For the scaled updates this usually means the batch touched fewer rows than
// the rank while mu blends away the global term; the message carries guidance.
struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rank-1 inverse update hit a near-zero denominator; the caller should
// rebuild the inverse from scratch.
struct SingularUpdate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// General small solve hit a negligible pivot.
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gauge matrix is not invertible.
struct SingularGauge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The linearized stepsize has no usable minimizer (stationary start).
struct DegenerateDirection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested more observed entries than the matrix has cells.
struct TooManySamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    long line;
    ParseError(const std::string& msg, long line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct DuplicateEntry : std::runtime_error {
    int i, j;
    DuplicateEntry(int row, int col)
        : std::runtime_error("duplicate entry (" + std::to_string(row) + ", " + std::to_string(col) + ")"),
          i(row), j(col) {}
};

// Relative residual requested against data whose observed values are all zero.
struct ZeroData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyTestSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    std::string field;
    ConfigError(std::string field_path, const std::string& msg)
        : std::runtime_error(field_path.empty() ? msg : field_path + ": " + msg),
          field(std::move(field_path)) {}
};

// Wraps a failure inside a scenario run with its scenario/solver context.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lrmc
