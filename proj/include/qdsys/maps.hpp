// maps.hpp
// The qutrit <-> two-qubit correspondence: isometric embedding of a spin-1
// state into the symmetric two-qubit subspace, its antisymmetric complement,
// and the biphoton polarization triple that shares the same amplitudes.

#pragma once

#include "qdsys/core.hpp"

namespace qdsys {

struct EmbeddingReport {
    StateVector input;                // qutrit state
    StateVector output;               // symmetric two-qubit image
    double concurrence_of_image = 0;  // entanglement the image carries
};

// |1> -> |uu>, |0> -> (|ud>+|du>)/sqrt2, |-1> -> |dd>, extended linearly.
EmbeddingReport qutrit_to_two_qubits(const StateVector& psi);

// (|ud> - |du>)/sqrt2: the singlet complement of the embedded triplet.
StateVector antisymmetric_state();

// Polarization states {|xx>, (|xy>+|yx>)/sqrt2, |yy>} of a photon pair,
// indexed like the spin projections {+1, 0, -1}.
std::vector<StateVector> biphoton_basis();

// Max over the spin components of || embed(S_i psi) - J_i embed(psi) ||,
// where J_i are the two-qubit total-spin operators. Zero for every psi when
// the embedding respects the spin action.
double spin_intertwining_check(const StateVector& psi);

} // namespace qdsys
