#ifndef OLCT_ERRORS_HPP
#define OLCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace olct {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// |ad - bc - 1| exceeded the unimodularity tolerance.
class UnimodularityViolation : public Error {
public:
    using Error::Error;
};

// Operation requires |b| above the branch threshold (or a valid b=0 branch).
class DegenerateCase : public Error {
public:
    using Error::Error;
};

// Two operands live on incompatible grids, or a grid violates the fast-path law.
class GridMismatch : public Error {
public:
    using Error::Error;
};

class GridInvalid : public Error {
public:
    using Error::Error;
};

class EdgeOutOfRange : public Error {
public:
    using Error::Error;
};

class NumericalOverflow : public Error {
public:
    using Error::Error;
};

class ConfigInvalid : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class HeaderMismatch : public Error {
public:
    using Error::Error;
};

} // namespace olct

#endif
