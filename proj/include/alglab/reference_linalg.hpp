#pragma once

#include "alglab/linalg.hpp"

namespace alglab::reference {

/// Serial textbook implementations of the two hot kernels, kept as the ground
/// truth the OpenMP paths are tested and benchmarked against.
Matrix multiply(const Matrix& a, const Matrix& b);
RrefResult rref(const Matrix& m);

} // namespace alglab::reference
