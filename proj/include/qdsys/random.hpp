// random.hpp
// Seeded generators for Haar-random states and random matrices. All
// randomness in the library flows through explicitly seeded engines so runs
// are reproducible; per-task streams are derived from a master seed by index.

#pragma once

#include "qdsys/core.hpp"

#include <cstdint>
#include <random>

namespace qdsys {

using Rng = std::mt19937_64;

// Independent stream for subtask `index` of a master seed.
inline Rng derived_rng(std::uint64_t master_seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

// Vector of iid standard complex Gaussians.
Vector gaussian_vector(int dim, Rng& rng);

// Haar-random normalized state on the given shape.
StateVector haar_random_state(const HilbertShape& shape, Rng& rng);

// Matrix of iid standard complex Gaussians.
Operator gaussian_matrix(int rows, int cols, Rng& rng);

// Haar-random unitary (QR of a Gaussian matrix with phase fix).
Operator random_unitary(int dim, Rng& rng);

// Random special-orthogonal real matrix, returned as dense doubles.
Eigen::MatrixXd random_special_orthogonal(int dim, Rng& rng);

// Random SL(d,C) matrix with condition number below `max_condition`,
// built as U * diag(s) * V with balanced singular values and det scaled to 1.
Operator random_sl_matrix(int dim, Rng& rng, double max_condition = 10.0);

} // namespace qdsys
