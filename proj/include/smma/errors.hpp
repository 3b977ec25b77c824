#pragma once

#include <stdexcept>
#include <string>

namespace smma {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or internally inconsistent input (distribution files, report JSON).
/// Messages name the offending line where one exists.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A fit that cannot be carried out at all (singular system, too few states).
/// Mere non-convergence is not an error; it is reported in the FitReport.
class FitError : public Error {
public:
    explicit FitError(const std::string& what) : Error(what) {}
};

} // namespace smma
