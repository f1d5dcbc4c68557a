#pragma once
#include <stdexcept>

namespace pubcomm {

// No sign change found while scanning for a root.
struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Could not bracket a root while marching away from a known point.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature exhausted its refinement budget above tolerance.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pubcomm
