// Shared generators for randomized tests. Everything is driven by explicit
// seeds so failures replay exactly.

#pragma once

#include "qdsys/core.hpp"
#include "qdsys/random.hpp"

namespace qdsys::testing {

inline Operator random_hermitian(int dim, Rng& rng) {
    Operator a = gaussian_matrix(dim, dim, rng);
    return 0.5 * (a + a.adjoint());
}

// Haar-random special unitary.
inline Operator random_su(int dim, Rng& rng) {
    Operator u = random_unitary(dim, rng);
    Complex det = u.determinant();
    return u / std::pow(det, Complex(1.0 / dim, 0.0));
}

inline double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace qdsys::testing
