#include "qdsys/core.hpp"

namespace qdsys {

Operator tensor_product(const Operator& a, const Operator& b) {
    const auto ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    Operator out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i)
        for (Eigen::Index j = 0; j < ac; ++j)
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    Vector out(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            out(i * b.dim() + j) = a.amp(i) * b.amp(j);
    HilbertShape shape = combined_shape(a.shape(), b.shape());
    if (a.is_unnormalized() || b.is_unnormalized())
        return StateVector::unnormalized(std::move(shape), std::move(out));
    return StateVector(std::move(shape), std::move(out));
}

Operator lift_local(const Operator& op, int site, const HilbertShape& shape) {
    if (site < 0 || site >= shape.n_sites())
        throw ShapeError("lift_local: site out of range");
    if (op.rows() != op.cols() || op.rows() != shape.dim(site))
        throw ShapeError("lift_local: operator dimension does not match site");

    int before = 1, after = 1;
    for (int s = 0; s < site; ++s) before *= shape.dim(s);
    for (int s = site + 1; s < shape.n_sites(); ++s) after *= shape.dim(s);

    Operator out = Operator::Identity(before, before);
    out = tensor_product(out, op);
    if (after > 1) out = tensor_product(out, Operator::Identity(after, after));
    return out;
}

Complex expectation(const Operator& op, const StateVector& psi) {
    if (op.rows() != op.cols() || op.rows() != psi.dim())
        throw ShapeError("expectation: operator/state dimension mismatch");
    psi.require_normalized("expectation");
    return psi.amplitudes().dot(op * psi.amplitudes());
}

Operator reduced_density(const StateVector& psi, const std::set<int>& keep) {
    psi.require_normalized("reduced_density");
    const auto& shape = psi.shape();
    if (keep.empty()) throw ShapeError("reduced_density: empty keep set");
    for (int s : keep)
        if (s < 0 || s >= shape.n_sites())
            throw ShapeError("reduced_density: invalid site index");

    int keep_dim = 1, rest_dim = 1;
    for (int s = 0; s < shape.n_sites(); ++s)
        (keep.count(s) ? keep_dim : rest_dim) *= shape.dim(s);

    // Rearrange amplitudes into a (keep x rest) matrix, then rho = M M^dagger.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(keep_dim, rest_dim);
    const int n = shape.n_sites();
    for (int idx = 0; idx < shape.total_dim(); ++idx) {
        int rem = idx, k = 0, r = 0;
        // decode row-major digits, slowest site first
        for (int s = 0; s < n; ++s) {
            int stride = 1;
            for (int t = s + 1; t < n; ++t) stride *= shape.dim(t);
            int digit = (rem / stride) % shape.dim(s);
            rem -= digit * stride;
            if (keep.count(s)) k = k * shape.dim(s) + digit;
            else r = r * shape.dim(s) + digit;
        }
        m(k, r) = psi.amp(idx);
    }
    return m * m.adjoint();
}

} // namespace qdsys
