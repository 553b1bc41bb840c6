#ifndef FILLINGS_ERRORS_HPP
#define FILLINGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fillings {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_arm : error {
    empty_arm() : error("arm is empty") {}
};

struct weight_too_large : error {
    explicit weight_too_large(int w)
        : error("arm weight " + std::to_string(w) + " exceeds -2") {}
};

struct out_of_range : error {
    using error::error;
};

struct not_dually_positive : error {
    using error::error;
};

struct no_such_intersection : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct unsupported_shape : error {
    using error::error;
};

struct not_disjoint : error {
    using error::error;
};

struct pattern_mismatch : error {
    using error::error;
};

struct bad_vertex : error {
    using error::error;
};

struct validation_error : error {
    using error::error;
};

}  // namespace fillings

#endif
