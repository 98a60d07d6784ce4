#pragma once

#include <stdexcept>
#include <string>

namespace rlwstab {

// Every library failure derives from Error; exit_code() is what the CLI returns.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

// Parameters outside the admissible set (Δ, □, disc(Q) ≤ 0, m ∉ (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

class NumericalError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

// Two independent routes to the same answer disagreed.
class InconsistencyError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// A band edge failed its monodromy-trace validation.
class EdgeMismatchError : public NumericalError {
public:
    EdgeMismatchError(const std::string& what, double edge, double trace, double expected)
        : NumericalError(what), edge_(edge), trace_(trace), expected_(expected) {}
    double edge() const noexcept { return edge_; }
    double trace() const noexcept { return trace_; }
    double expected_trace() const noexcept { return expected_; }

private:
    double edge_, trace_, expected_;
};

class ConfigError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

} // namespace rlwstab
