#pragma once

#include <stdexcept>

namespace probelab {

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct duplicate_key_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct no_prime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace probelab
