#pragma once

#include <stdexcept>
#include <string>

namespace spdc {

// Error taxonomy maps onto CLI exit codes: validation 2, physics 3, io 4.

struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct physics_error : std::domain_error {
    explicit physics_error(const std::string& msg) : std::domain_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace spdc
