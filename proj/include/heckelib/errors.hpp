#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Period matrix validation.
struct not_symmetric : error {
    using error::error;
};
struct imaginary_part_not_positive_definite : error {
    using error::error;
};
struct singular_system : error {
    using error::error;
};

// Grid operations.
struct resolution_mismatch : error {
    using error::error;
};
struct resolution_too_low : error {
    using error::error;
};

// Pic extension.
struct zero_multiplier : error {
    using error::error;
};

// Torus bundles.
struct shape_mismatch : error {
    using error::error;
};
struct pairing_not_unimodular : error {
    using error::error;
};

// Finite-field models.
struct not_prime : error {
    using error::error;
};
struct field_mismatch : error {
    using error::error;
};
struct unsupported_bundle_case : error {
    using error::error;
};

// Fundamental-group audit.
struct zero_input : error {
    using error::error;
};
struct not_coprime : error {
    using error::error;
};

} // namespace hecke
