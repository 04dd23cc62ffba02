#pragma once

#include <stdexcept>
#include <string>

namespace rgg {

// Fatal numerical problems (quadrature blowup, continued fraction not
// converging, iteration caps on root finding). CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed config / file formats. CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rgg
