#pragma once

#include <stdexcept>
#include <string>

namespace apsvm {

/// Failure category; maps onto the CLI exit-code contract.
enum class ErrorKind {
    Input,       ///< malformed or inconsistent input (exit 2)
    Degenerate,  ///< data with no usable spread (exit 2)
    Numerical,   ///< decomposition failure, non-finite values (exit 3)
    Convergence, ///< iteration budget exhausted (exit 3)
    Experiment,  ///< every grid point failed (exit 3)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

class DegenerateDataError : public Error {
public:
    explicit DegenerateDataError(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class ExperimentError : public Error {
public:
    explicit ExperimentError(const std::string& what) : Error(ErrorKind::Experiment, what) {}
};

inline int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Input:
    case ErrorKind::Degenerate:
        return 2;
    case ErrorKind::Numerical:
    case ErrorKind::Convergence:
    case ErrorKind::Experiment:
        return 3;
    }
    return 3;
}

} // namespace apsvm
