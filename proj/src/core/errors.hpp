#pragma once

#include <stdexcept>
#include <string>

namespace betti {

// Exact arithmetic left the 64-bit range; results are never silently wrapped.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

// The input vector is not the reduced Betti vector of any 2-linear ideal quotient.
class NotRealizableError : public std::runtime_error {
public:
    explicit NotRealizableError(const std::string& msg) : std::runtime_error(msg) {}
};

class NotChordalError : public std::runtime_error {
public:
    explicit NotChordalError(const std::string& msg) : std::runtime_error(msg) {}
};

// The input vector lies outside the cone of modules with beta_{0,0} = m.
class NotInConeError : public std::runtime_error {
public:
    explicit NotInConeError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace betti
