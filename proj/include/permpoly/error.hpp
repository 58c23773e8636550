#pragma once

#include <stdexcept>
#include <string>

namespace permpoly {

/// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace permpoly
