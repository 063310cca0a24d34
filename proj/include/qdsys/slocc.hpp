// slocc.hpp
// Stochastic-LOCC group actions (per-site determinant-one invertible
// matrices), polynomial entanglement measures (concurrence, three-tangle,
// the degree-4 hyperdeterminant), the four-class three-qubit classifier,
// and the orbit-minimum measure computed by alternating local filtering.

#pragma once

#include "qdsys/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdsys {

// One determinant-1 invertible matrix per site.
class SloccElement {
public:
    // Strict: every local must already have determinant 1 within 1e-10.
    SloccElement(HilbertShape shape, std::vector<Operator> locals);

    // Rescales each local to determinant 1; rejects numerically singular input.
    static SloccElement det_normalized(HilbertShape shape, std::vector<Operator> locals);

    static SloccElement identity(const HilbertShape& shape);

    const HilbertShape& shape() const { return shape_; }
    const std::vector<Operator>& locals() const { return locals_; }

private:
    SloccElement() : shape_(std::vector<int>{2}) {}
    HilbertShape shape_;
    std::vector<Operator> locals_;
};

struct SloccApplied {
    StateVector state;        // unnormalized unless renormalize was requested
    double norm_factor = 1.0; // norm of the raw transformed vector
};

SloccApplied apply_slocc(const SloccElement& g, const StateVector& psi, bool renormalize = false);

// Two-qubit entanglement: 2 |det of the 2x2 coefficient matrix|.
double concurrence(const StateVector& psi);

// Degree-4 polynomial invariant of a three-qubit tensor, evaluated term by
// term; accepts unnormalized tensors (the invariance property lives there).
double hyperdeterminant(const StateVector& psi);

// 4 |hyperdeterminant| of a normalized three-qubit state, in [0, 1].
double three_tangle(const StateVector& psi);

enum class SloccClassLabel { ghz, w, biseparable, separable };

struct SloccClass {
    SloccClassLabel label;
    std::optional<int> separated_site;  // set for biseparable: that site factors out

    std::string to_string() const;
};

// Three-qubit classification: GHZ iff the tangle clears `tol`, otherwise by
// the ranks of the single-site reduced densities. Boundary states fall to
// the lower class.
SloccClass classify_three_qubit(const StateVector& psi, double tol = 1e-9);

struct NormalFormResult {
    StateVector state;     // filtered orbit representative, unnormalized
    double norm_sq = 0.0;  // squared length of that representative
    bool converged = false;
    int sweeps = 0;
};

// Alternating local filtering: each site is repeatedly rescaled by the
// inverse square root of its reduced density (determinant-normalized) until
// every single-site density is maximally mixed. The norm never increases;
// states whose orbit closure reaches zero are detected by norm collapse.
NormalFormResult sl_normal_form(const StateVector& psi, int max_iter = 10000, double tol = 1e-10);

// Squared length of the minimal vector in the closure of the SLOCC orbit;
// zero on the null cone.
double orbit_measure(const StateVector& psi);

} // namespace qdsys
