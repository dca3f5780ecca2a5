// Exception types shared by the engines and the command line.

#pragma once

#include <stdexcept>
#include <string>

namespace oqb {

// Invalid physical parameters, grids or configuration. Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Integrator failure, norm breach or other numerical breakdown. Exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace oqb
