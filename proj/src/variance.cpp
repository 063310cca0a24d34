#include "qdsys/variance.hpp"

#include "qdsys/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qdsys {

namespace {

double real_expectation(const Operator& op, const StateVector& psi, const std::string& label) {
    Complex e = expectation(op, psi);
    if (std::abs(e.imag()) > 1e-10)
        throw ValidationError("expectation of '" + label + "' has a non-negligible imaginary part");
    return e.real();
}

} // namespace

double variance(const Observable& x, const StateVector& psi) {
    double mean = real_expectation(x.matrix, psi, x.label);
    Vector xpsi = x.matrix * psi.amplitudes();
    double second_moment = xpsi.squaredNorm();  // <X^2> for Hermitian X
    return std::max(0.0, second_moment - mean * mean);
}

VarianceReport total_variance(const ObservableSet& set, const StateVector& psi, double tol) {
    if (psi.dim() != set.shape().total_dim())
        throw ShapeError("total_variance: state/set dimension mismatch");
    psi.require_normalized("total_variance");

    VarianceReport rep;
    rep.tolerance = tol;
    rep.casimir = set.casimir_scalar();
    for (const auto& x : set.observables()) {
        double mean = real_expectation(x.matrix, psi, x.label);
        Vector xpsi = x.matrix * psi.amplitudes();
        double var = std::max(0.0, xpsi.squaredNorm() - mean * mean);
        rep.per_observable.emplace_back(x.label, var);
        rep.total += var;
        rep.residual += mean * mean;
    }
    rep.is_ce = rep.residual < tol;

    // Consistency of direct summation against the Casimir shortcut; only
    // meaningful when the squared sum really is scalar on the full space.
    if (set.casimir_kind() == CasimirKind::exact &&
        std::abs(rep.total - (*rep.casimir - rep.residual)) > 1e-9)
        throw std::logic_error("total_variance: direct sum and Casimir shortcut disagree");
    return rep;
}

CeCheckResult ce_check(const ObservableSet& set, const StateVector& psi, double tol) {
    if (psi.dim() != set.shape().total_dim())
        throw ShapeError("ce_check: state/set dimension mismatch");
    psi.require_normalized("ce_check");

    CeCheckResult r;
    for (const auto& x : set.observables()) {
        double mean = real_expectation(x.matrix, psi, x.label);
        r.residual += mean * mean;
        r.max_expectation = std::max(r.max_expectation, std::abs(mean));
    }
    r.is_ce = r.max_expectation < tol;
    return r;
}

namespace {

// Residual and its Riemannian gradient on the unit sphere of C^D viewed as
// a real manifold. sign=+1 minimizes the residual (CE search), sign=-1
// maximizes it (coherent / minimum-uncertainty search).
struct ResidualObjective {
    const ObservableSet& set;
    double sign;

    double value(const Vector& psi) const {
        double f = 0.0;
        for (const auto& x : set.observables()) {
            double m = psi.dot(x.matrix * psi).real();
            f += m * m;
        }
        return sign * f;
    }

    double value_and_grad(const Vector& psi, Vector& grad) const {
        double f = 0.0;
        grad = Vector::Zero(psi.size());
        for (const auto& x : set.observables()) {
            Vector xpsi = x.matrix * psi;
            double m = psi.dot(xpsi).real();
            f += m * m;
            grad += 4.0 * m * (xpsi - m * psi);  // already tangent to the sphere
        }
        grad *= sign;
        return sign * f;
    }
};

struct SphereOptResult {
    Vector psi;
    double objective;
};

// Projected gradient descent with Armijo backtracking; the retraction is
// plain renormalization.
SphereOptResult sphere_descent(const ResidualObjective& obj, Vector psi, int max_iter) {
    const double armijo_c = 1e-4;
    double step = 1.0;
    Vector grad;
    double f = obj.value_and_grad(psi, grad);
    for (int it = 0; it < max_iter; ++it) {
        double gnorm_sq = grad.squaredNorm();
        if (gnorm_sq < 1e-24) break;
        double trial_step = std::min(step * 2.0, 1e3);
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            Vector cand = psi - trial_step * grad;
            cand /= cand.norm();
            double fc = obj.value(cand);
            if (fc <= f - armijo_c * trial_step * gnorm_sq) {
                psi = std::move(cand);
                f = obj.value_and_grad(psi, grad);
                step = trial_step;
                accepted = true;
                break;
            }
            trial_step *= 0.5;
        }
        if (!accepted) break;  // no descent at the smallest step: converged
    }
    return {std::move(psi), f};
}

} // namespace

FindCeResult find_ce(const ObservableSet& set, const FindCeOptions& opts) {
    ResidualObjective obj{set, +1.0};
    FindCeResult result;
    result.best_residual = std::numeric_limits<double>::infinity();
    Vector best;

    for (int s = 0; s < opts.n_starts; ++s) {
        Rng rng = derived_rng(opts.seed, static_cast<std::uint64_t>(s));
        Vector start = gaussian_vector(set.shape().total_dim(), rng);
        start /= start.norm();
        SphereOptResult r = sphere_descent(obj, std::move(start), opts.max_iter);
        result.starts_run = s + 1;
        if (r.objective < result.best_residual) {
            result.best_residual = r.objective;
            best = r.psi;
        }
        if (result.best_residual < opts.tol) break;
    }

    if (result.best_residual < opts.tol)
        result.state = StateVector(set.shape(), best / best.norm());
    return result;
}

double remoteness(const ObservableSet& set, const StateVector& psi, const FindCeOptions& opts) {
    auto casimir = set.casimir_scalar();
    if (!casimir) throw ValidationError("remoteness: observable set has no Casimir scalar");

    VarianceReport rep = total_variance(set, psi);

    // Largest achievable residual = smallest achievable total variance.
    ResidualObjective obj{set, -1.0};
    double max_residual = 0.0;
    for (int s = 0; s < opts.n_starts; ++s) {
        Rng rng = derived_rng(opts.seed, 0x9e3779b9ull + static_cast<std::uint64_t>(s));
        Vector start = gaussian_vector(set.shape().total_dim(), rng);
        start /= start.norm();
        SphereOptResult r = sphere_descent(obj, std::move(start), opts.max_iter);
        max_residual = std::max(max_residual, -r.objective);
    }
    double min_total = *casimir - max_residual;
    if (*casimir - min_total < 1e-12) return 0.0;  // degenerate set: no spread
    double rem = (rep.total - min_total) / (*casimir - min_total);
    return std::clamp(rem, 0.0, 1.0);
}

} // namespace qdsys
