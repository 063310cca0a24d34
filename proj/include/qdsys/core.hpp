// core.hpp
// Dense complex linear algebra and tensor-structure bookkeeping for small
// multipartite Hilbert spaces (total dimension up to desk scale).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdsys {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr double kNormTol = 1e-12;

// Shape or dimension mismatch between operands.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input fails a declared validity check (non-Hermitian observable,
// bad parameters, non-orthogonal basis, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tensor factorization of the Hilbert space: one local dimension per site,
// total dimension is the product. Immutable.
class HilbertShape {
public:
    explicit HilbertShape(std::vector<int> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw ValidationError("HilbertShape: no sites");
        total_ = 1;
        for (int d : dims_) {
            if (d < 2) throw ValidationError("HilbertShape: local dimension must be >= 2");
            total_ *= d;
        }
    }

    int n_sites() const { return static_cast<int>(dims_.size()); }
    int dim(int site) const { return dims_.at(static_cast<size_t>(site)); }
    int total_dim() const { return total_; }
    const std::vector<int>& dims() const { return dims_; }

    bool operator==(const HilbertShape& o) const { return dims_ == o.dims_; }
    bool operator!=(const HilbertShape& o) const { return !(*this == o); }

private:
    std::vector<int> dims_;
    int total_ = 0;
};

// Pure state over a tensor-factored space. Amplitudes are stored row-major
// with the last site index varying fastest. States are normalized on
// construction unless explicitly flagged unnormalized (intermediate SLOCC
// outputs); analysis operations reject unnormalized input.
class StateVector {
public:
    StateVector(HilbertShape shape, Vector amplitudes)
        : shape_(std::move(shape)), amps_(std::move(amplitudes)) {
        check_size();
        if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol)
            throw ValidationError("StateVector: amplitudes not normalized (use unnormalized() for raw tensors)");
    }

    static StateVector unnormalized(HilbertShape shape, Vector amplitudes) {
        StateVector psi;
        psi.shape_ = std::move(shape);
        psi.amps_ = std::move(amplitudes);
        psi.unnormalized_ = true;
        psi.check_size();
        return psi;
    }

    // Computational basis state |index> of the given shape.
    static StateVector basis(HilbertShape shape, int index) {
        if (index < 0 || index >= shape.total_dim())
            throw ShapeError("StateVector::basis: index out of range");
        Vector v = Vector::Zero(shape.total_dim());
        v(index) = 1.0;
        return StateVector(std::move(shape), std::move(v));
    }

    const HilbertShape& shape() const { return shape_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }
    Complex amp(int i) const { return amps_(i); }
    bool is_unnormalized() const { return unnormalized_; }

    double norm() const { return amps_.norm(); }
    double squared_norm() const { return amps_.squaredNorm(); }

    // Normalized copy; throws on (numerically) zero vectors.
    StateVector normalized() const {
        double n = norm();
        if (n < 1e-150) throw ValidationError("StateVector: cannot normalize zero vector");
        return StateVector(shape_, amps_ / n);
    }

    void require_normalized(const char* who) const {
        if (unnormalized_ || std::abs(amps_.squaredNorm() - 1.0) > kNormTol)
            throw ValidationError(std::string(who) + ": requires a normalized state");
    }

private:
    StateVector() : shape_(std::vector<int>{2}) {}

    void check_size() const {
        if (amps_.size() != shape_.total_dim())
            throw ShapeError("StateVector: amplitude count does not match shape");
        if (!amps_.allFinite())
            throw ValidationError("StateVector: non-finite amplitude");
    }

    HilbertShape shape_;
    Vector amps_;
    bool unnormalized_ = false;
};

inline HilbertShape combined_shape(const HilbertShape& a, const HilbertShape& b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return HilbertShape(std::move(dims));
}

// Kronecker product, index convention matching StateVector ordering
// (factor `a` owns the slow indices).
Operator tensor_product(const Operator& a, const Operator& b);
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Ix...x op x...x I with `op` acting on `site` of `shape`.
Operator lift_local(const Operator& op, int site, const HilbertShape& shape);

// <psi|X|psi>. The imaginary part is kept so callers can assert Hermiticity.
Complex expectation(const Operator& op, const StateVector& psi);

inline Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.shape() != b.shape()) throw ShapeError("inner_product: shape mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

// |<a|b>|^2
inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

// Partial trace onto the kept sites (in increasing site order).
Operator reduced_density(const StateVector& psi, const std::set<int>& keep);

} // namespace qdsys
