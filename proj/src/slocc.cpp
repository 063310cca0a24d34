#include "qdsys/slocc.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace qdsys {

namespace {

void check_locals(const HilbertShape& shape, const std::vector<Operator>& locals) {
    if (static_cast<int>(locals.size()) != shape.n_sites())
        throw ShapeError("SloccElement: one local matrix per site required");
    for (int s = 0; s < shape.n_sites(); ++s) {
        const auto& m = locals[static_cast<size_t>(s)];
        if (m.rows() != m.cols() || m.rows() != shape.dim(s))
            throw ShapeError("SloccElement: local dimension mismatch at site " + std::to_string(s));
    }
}

// Applies a local matrix along one tensor axis (mode product).
void apply_local_inplace(Vector& amps, const Operator& g, int site, const HilbertShape& shape) {
    const int d = shape.dim(site);
    int after = 1;
    for (int s = site + 1; s < shape.n_sites(); ++s) after *= shape.dim(s);
    const int before = shape.total_dim() / (d * after);

    Vector slice(d), out(d);
    for (int b = 0; b < before; ++b) {
        for (int a = 0; a < after; ++a) {
            const int base = b * d * after + a;
            for (int k = 0; k < d; ++k) slice(k) = amps(base + k * after);
            out.noalias() = g * slice;
            for (int k = 0; k < d; ++k) amps(base + k * after) = out(k);
        }
    }
}

void require_qubits(const StateVector& psi, int n, const char* who) {
    const auto& dims = psi.shape().dims();
    if (n > 0 && static_cast<int>(dims.size()) != n)
        throw ShapeError(std::string(who) + ": wrong number of sites");
    for (int d : dims)
        if (d != 2) throw ShapeError(std::string(who) + ": qubit sites required");
}

} // namespace

SloccElement::SloccElement(HilbertShape shape, std::vector<Operator> locals) : SloccElement() {
    check_locals(shape, locals);
    for (const auto& m : locals)
        if (std::abs(m.determinant() - Complex(1.0)) > 1e-10)
            throw ValidationError("SloccElement: local determinant is not 1");
    shape_ = std::move(shape);
    locals_ = std::move(locals);
}

SloccElement SloccElement::det_normalized(HilbertShape shape, std::vector<Operator> locals) {
    check_locals(shape, locals);
    for (auto& m : locals) {
        Complex det = m.determinant();
        if (std::abs(det) < 1e-12)
            throw ValidationError("SloccElement: local matrix is numerically singular");
        m /= std::pow(det, Complex(1.0 / static_cast<double>(m.rows()), 0.0));
    }
    SloccElement g;
    g.shape_ = std::move(shape);
    g.locals_ = std::move(locals);
    return g;
}

SloccElement SloccElement::identity(const HilbertShape& shape) {
    std::vector<Operator> locals;
    for (int s = 0; s < shape.n_sites(); ++s)
        locals.push_back(Operator::Identity(shape.dim(s), shape.dim(s)));
    SloccElement g;
    g.shape_ = shape;
    g.locals_ = std::move(locals);
    return g;
}

SloccApplied apply_slocc(const SloccElement& g, const StateVector& psi, bool renormalize) {
    if (g.shape() != psi.shape()) throw ShapeError("apply_slocc: shape mismatch");
    for (const auto& m : g.locals())
        if (std::abs(m.determinant()) < 1e-12)
            throw ValidationError("apply_slocc: non-invertible local");

    Vector amps = psi.amplitudes();
    for (int s = 0; s < g.shape().n_sites(); ++s)
        apply_local_inplace(amps, g.locals()[static_cast<size_t>(s)], s, g.shape());

    double norm = amps.norm();
    if (renormalize) {
        if (norm < 1e-150) throw ValidationError("apply_slocc: transformed state has zero norm");
        return {StateVector(psi.shape(), amps / norm), norm};
    }
    return {StateVector::unnormalized(psi.shape(), std::move(amps)), norm};
}

double concurrence(const StateVector& psi) {
    require_qubits(psi, 2, "concurrence");
    psi.require_normalized("concurrence");
    Complex det = psi.amp(0) * psi.amp(3) - psi.amp(1) * psi.amp(2);
    return 2.0 * std::abs(det);
}

double hyperdeterminant(const StateVector& psi) {
    require_qubits(psi, 3, "hyperdeterminant");
    // index = 4i + 2j + k for |ijk>
    const Complex p000 = psi.amp(0), p001 = psi.amp(1), p010 = psi.amp(2), p011 = psi.amp(3);
    const Complex p100 = psi.amp(4), p101 = psi.amp(5), p110 = psi.amp(6), p111 = psi.amp(7);

    Complex det = p000 * p000 * p111 * p111 + p001 * p001 * p110 * p110 +
                  p010 * p010 * p101 * p101 + p100 * p100 * p011 * p011;
    det -= 2.0 * (p000 * p001 * p110 * p111 + p000 * p010 * p101 * p111 +
                  p000 * p100 * p011 * p111 + p001 * p010 * p101 * p110 +
                  p001 * p100 * p011 * p110 + p010 * p100 * p011 * p101);
    det += 4.0 * (p000 * p011 * p101 * p110 + p001 * p010 * p100 * p111);
    return std::abs(det);
}

double three_tangle(const StateVector& psi) {
    psi.require_normalized("three_tangle");
    return 4.0 * hyperdeterminant(psi);
}

std::string SloccClass::to_string() const {
    switch (label) {
        case SloccClassLabel::ghz: return "GHZ";
        case SloccClassLabel::w: return "W";
        case SloccClassLabel::biseparable: {
            std::string others;
            for (int s = 0; s < 3; ++s)
                if (s != *separated_site) others += std::to_string(s);
            return "biseparable {" + std::to_string(*separated_site) + "}|{" + others + "}";
        }
        case SloccClassLabel::separable: return "completely separable";
    }
    return "?";
}

SloccClass classify_three_qubit(const StateVector& psi, double tol) {
    require_qubits(psi, 3, "classify_three_qubit");
    psi.require_normalized("classify_three_qubit");

    if (three_tangle(psi) > tol) return {SloccClassLabel::ghz, std::nullopt};

    std::vector<int> product_sites;
    for (int s = 0; s < 3; ++s) {
        Operator rho = reduced_density(psi, {s});
        Eigen::SelfAdjointEigenSolver<Operator> es(rho);
        if (es.eigenvalues().minCoeff() <= tol) product_sites.push_back(s);
    }
    if (product_sites.empty()) return {SloccClassLabel::w, std::nullopt};
    if (product_sites.size() == 1) return {SloccClassLabel::biseparable, product_sites.front()};
    return {SloccClassLabel::separable, std::nullopt};
}

NormalFormResult sl_normal_form(const StateVector& psi, int max_iter, double tol) {
    const auto& shape = psi.shape();
    require_qubits(psi, -1, "sl_normal_form");

    Vector amps = psi.amplitudes();
    const int n = shape.n_sites();

    auto collapse = [&](double norm_sq) {
        return NormalFormResult{StateVector::unnormalized(shape, Vector::Zero(shape.total_dim())),
                                norm_sq < 1e-6 ? norm_sq : 0.0, false, 0};
    };

    for (int sweep = 0; sweep < max_iter; ++sweep) {
        double norm_sq = amps.squaredNorm();
        if (norm_sq < 1e-6) {
            auto r = collapse(norm_sq);
            r.sweeps = sweep;
            return r;
        }

        // One filtering pass over all sites, tracking the worst density defect
        // seen *before* each site's own filter.
        double defect = 0.0;
        for (int s = 0; s < n; ++s) {
            StateVector normed(shape, amps / std::sqrt(amps.squaredNorm()));
            Operator rho = reduced_density(normed, {s});
            const int d = shape.dim(s);
            Operator half = 0.5 * Operator::Identity(d, d);
            defect = std::max(defect, (rho - half).cwiseAbs().maxCoeff());

            Eigen::SelfAdjointEigenSolver<Operator> es(rho);
            if (es.eigenvalues().minCoeff() < 1e-14) {
                // singular marginal: the filter direction drives the norm to zero
                auto r = collapse(0.0);
                r.sweeps = sweep;
                return r;
            }
            // (2 rho)^(-1/2), rescaled to determinant 1
            Eigen::VectorXd inv_sqrt = (2.0 * es.eigenvalues()).cwiseSqrt().cwiseInverse();
            Operator filter = es.eigenvectors() * inv_sqrt.cast<Complex>().asDiagonal() *
                              es.eigenvectors().adjoint();
            double det = std::abs(filter.determinant());
            filter /= std::pow(det, 1.0 / d);
            apply_local_inplace(amps, filter, s, shape);
        }

        if (defect < tol) {
            double final_norm_sq = amps.squaredNorm();
            return {StateVector::unnormalized(shape, std::move(amps)), final_norm_sq, true, sweep};
        }
    }

    double norm_sq = amps.squaredNorm();
    if (norm_sq < 1e-6) return collapse(norm_sq);
    return {StateVector::unnormalized(shape, std::move(amps)), norm_sq, false, max_iter};
}

double orbit_measure(const StateVector& psi) {
    NormalFormResult r = sl_normal_form(psi);
    return r.converged ? r.norm_sq : 0.0;
}

} // namespace qdsys
