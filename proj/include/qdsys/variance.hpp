// variance.hpp
// Total quantum uncertainty relative to an observable basis, detection of
// completely entangled (CE) states (all basic expectations vanish), and a
// multistart Riemannian search for CE states on the unit sphere.

#pragma once

#include "qdsys/core.hpp"
#include "qdsys/observables.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdsys {

struct VarianceReport {
    std::vector<std::pair<std::string, double>> per_observable;
    double total = 0.0;                  // sum of the per-observable variances
    std::optional<double> casimir;       // upper bound on total when attached
    double residual = 0.0;               // sum of squared expectations (CE defect)
    bool is_ce = false;                  // residual < tolerance
    double tolerance = 1e-8;
};

// <X^2> - <X>^2, clamped to zero from below.
double variance(const Observable& x, const StateVector& psi);

VarianceReport total_variance(const ObservableSet& set, const StateVector& psi,
                              double tol = 1e-8);

struct CeCheckResult {
    bool is_ce = false;       // max_i |<X_i>| below tolerance
    double residual = 0.0;    // sum_i <X_i>^2
    double max_expectation = 0.0;
};

CeCheckResult ce_check(const ObservableSet& set, const StateVector& psi, double tol = 1e-8);

struct FindCeOptions {
    int n_starts = 32;
    double tol = 1e-8;
    int max_iter = 5000;
    std::uint64_t seed = 0;
};

// Failure is a value: `state` empty, `best_residual` the certified floor.
struct FindCeResult {
    std::optional<StateVector> state;
    double best_residual = 0.0;
    int starts_run = 0;
    bool found() const { return state.has_value(); }
};

// Searches for a state with vanishing basic expectations by minimizing the
// residual over the unit sphere (projected gradient descent with Armijo
// backtracking, Haar-random multistart). Deterministic for a fixed seed.
FindCeResult find_ce(const ObservableSet& set, const FindCeOptions& opts = {});

// Position of psi between the least-uncertain (coherent) states and the CE
// ceiling: (total - min_total) / (casimir - min_total), in [0, 1].
// The floor is estimated by the same optimizer run in maximize-residual mode.
double remoteness(const ObservableSet& set, const StateVector& psi,
                  const FindCeOptions& opts = {});

} // namespace qdsys
