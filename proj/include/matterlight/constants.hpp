#pragma once

namespace mlt {

/// Fixed physical constants (CODATA 2018). Never mutated.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // J s
    double c = 2.99792458e8;        // m/s
    double eps0 = 8.8541878128e-12; // F/m
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace mlt
