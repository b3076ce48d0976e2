#pragma once

#include <stdexcept>
#include <string>

namespace normkit {

// Base type for every error the library raises; callers that only care
// about "normkit failed" can catch this one.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

// A transform hit a probability boundary (CDF value of exactly 0 or 1),
// so the image is not a finite number.
class overflow_error : public error {
public:
    using error::error;
};

// Sample with zero variance where a scale estimate is required.
class degenerate_sample_error : public error {
public:
    using error::error;
};

// Sample below the minimum size a statistic is defined for.
class sample_too_small_error : public error {
public:
    using error::error;
};

// Parameter fitting could not produce a result (e.g. no feasible grid point).
class fit_error : public error {
public:
    using error::error;
};

// No session pair with enough common subjects to correlate.
class reliability_error : public error {
public:
    using error::error;
};

// Malformed input file (CSV or serialized transform spec).
class io_error : public error {
public:
    using error::error;
};

} // namespace normkit
