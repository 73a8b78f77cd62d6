#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mlt {

using Index = Eigen::Index;

template <typename Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using ArrayXc = Eigen::Array<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Real = double;
using Complex = std::complex<Real>;
using ArrayXr = ArrayX<Real>;
using ArrayXcd = ArrayXc<Real>;

// Error categories mapped to CLI exit codes (1/2/3).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mlt
