#include "qdsys/maps.hpp"

#include "qdsys/observables.hpp"
#include "qdsys/slocc.hpp"

#include <cmath>

namespace qdsys {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// 4x3 isometry taking the spin basis {+1, 0, -1} into the symmetric
// two-qubit subspace.
Eigen::MatrixXcd embedding_matrix() {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(4, 3);
    e(0, 0) = 1.0;                            // |+1> -> |uu>
    e(1, 1) = kInvSqrt2;                      // |0>  -> (|ud>+|du>)/sqrt2
    e(2, 1) = kInvSqrt2;
    e(3, 2) = 1.0;                            // |-1> -> |dd>
    return e;
}

} // namespace

EmbeddingReport qutrit_to_two_qubits(const StateVector& psi) {
    if (psi.shape().dims() != std::vector<int>{3})
        throw ShapeError("qutrit_to_two_qubits: single-qutrit state required");
    psi.require_normalized("qutrit_to_two_qubits");

    Vector image = embedding_matrix() * psi.amplitudes();
    StateVector out(HilbertShape({2, 2}), std::move(image));
    double c = concurrence(out);
    return {psi, std::move(out), c};
}

StateVector antisymmetric_state() {
    Vector v = Vector::Zero(4);
    v(1) = kInvSqrt2;
    v(2) = -kInvSqrt2;
    return StateVector(HilbertShape({2, 2}), std::move(v));
}

std::vector<StateVector> biphoton_basis() {
    HilbertShape q3({3});
    std::vector<StateVector> basis;
    for (int i = 0; i < 3; ++i)
        basis.push_back(qutrit_to_two_qubits(StateVector::basis(q3, i)).output);
    return basis;
}

double spin_intertwining_check(const StateVector& psi) {
    if (psi.shape().dims() != std::vector<int>{3})
        throw ShapeError("spin_intertwining_check: single-qutrit state required");

    Eigen::MatrixXcd embed = embedding_matrix();
    ObservableSet spin1 = spin1_set();
    HilbertShape two_qubits({2, 2});
    const Operator paulis[3] = {pauli_x(), pauli_y(), pauli_z()};

    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        Operator j_total = 0.5 * (lift_local(paulis[i], 0, two_qubits) +
                                  lift_local(paulis[i], 1, two_qubits));
        Vector lhs = embed * (spin1.observables()[static_cast<size_t>(i)].matrix * psi.amplitudes());
        Vector rhs = j_total * (embed * psi.amplitudes());
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

} // namespace qdsys
