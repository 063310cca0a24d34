// lambda_sim.hpp
// Quantum-trajectory simulation of two three-level Lambda atoms in a single
// lossy cavity mode. The cavity pumps the 1<->2 transition; the 2->3 Stokes
// emission is a collective jump channel whose click heralds a long-lived
// entangled pair in levels {1,3}.
//
// Units: hbar = 1, level-1 energy = 0. Atom basis order |1>,|2>,|3>; full
// space is atom (x) atom (x) cavity Fock with the cavity index fastest.

#pragma once

#include "qdsys/core.hpp"
#include "qdsys/observables.hpp"
#include "qdsys/variance.hpp"

#include <cstdint>
#include <vector>

namespace qdsys {

// Photon probability reached the Fock cutoff: results would be truncated.
struct CutoffOverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LambdaParams {
    double epsilon2 = 1.0;   // level-2 energy
    double epsilon3 = 0.4;   // level-3 energy
    double omega_c = 1.0;    // cavity frequency (resonant with 1<->2 by default)
    double g = 0.25;         // atom-cavity coupling on 1<->2
    double gamma_s = 0.1;    // collective Stokes rate (2 -> 3)
    double kappa = 0.0;      // cavity decay rate
    int fock_cutoff = 2;     // highest retained Fock state
    double dt = 0.01;
    double t_max = 250.0;
    std::uint64_t seed = 1;
    bool individual_jumps = false;  // per-atom Stokes channels instead of collective

    double omega_stokes() const { return epsilon2 - epsilon3; }
    HilbertShape shape() const { return HilbertShape({3, 3, fock_cutoff + 1}); }
    void validate() const;
};

enum class JumpChannel { stokes, cavity };

struct JumpEvent {
    double time = 0.0;
    JumpChannel channel = JumpChannel::stokes;
    int atom = -1;  // emitting atom for individual Stokes jumps; -1 = collective
    StateVector post_state;
};

struct TrajectoryRecord {
    std::vector<double> times;        // step grid (filled when states are recorded)
    std::vector<StateVector> states;  // normalized state at each grid point
    std::vector<JumpEvent> jumps;
    StateVector final_state;
    double final_time = 0.0;
};

// Sum of the atomic terms, the cavity energy, and the 1<->2 exchange coupling.
Operator build_hamiltonian(const LambdaParams& p);

// Collective Stokes lowering operator |3><2|_1 + |3><2|_2 on the full space.
Operator stokes_operator(const LambdaParams& p);

// Cavity annihilation operator on the full space.
Operator cavity_operator(const LambdaParams& p);

// Photon number plus populations of levels 2 and 3; conserved by the
// coherent dynamics and by Stokes jumps (cavity jumps remove one unit).
Operator excitation_operator(const LambdaParams& p);

// Both atoms in level 1, n photons in the cavity.
StateVector ground_with_photons(const LambdaParams& p, int n_photons);

// (|l,1> + |1,l>)/sqrt2 in the atoms, cavity in vacuum; level = 2 gives the
// pump-cycle entangled pair, level = 3 the post-Stokes robust pair.
StateVector symmetric_pair_state(const LambdaParams& p, int level);

// One RK4 step of the no-jump (non-Hermitian) evolution; does not normalize,
// so callers can watch the norm decay.
Vector no_jump_step(const Operator& h_eff, const Vector& psi, double dt);

// Monte-Carlo wavefunction run with per-step jump sampling. Deterministic
// for fixed params and seed. State snapshots cost memory; enable them only
// for single-trajectory analysis.
TrajectoryRecord run_trajectory(const LambdaParams& p, const StateVector& initial,
                                bool record_states = false);

inline TrajectoryRecord run_trajectory(const LambdaParams& p, bool record_states = false) {
    return run_trajectory(p, ground_with_photons(p, 1), record_states);
}

struct PostStokesReport {
    double jump_time = 0.0;
    double fidelity = 0.0;        // against the symmetric {1,3} pair
    double atomic_purity = 0.0;   // Tr(rho_atoms^2): 1 when the cavity factors out
    bool is_ce = false;           // under the {1,3} pair observables
    double residual = 0.0;
    double total_variance = 0.0;
    double atomic_energy = 0.0;   // expectation of the bare atomic Hamiltonian
    StateVector atomic_state;     // dominant eigenvector of the atomic density
};

// Analyzes the atomic state right after the first Stokes jump of the record.
PostStokesReport post_stokes_analysis(const LambdaParams& p, const TrajectoryRecord& rec);

// Deterministic no-jump evolution over the horizon; returns 1 - fidelity
// with the initial state (normalized at the end). Near zero for dark states.
double stability_check(const LambdaParams& p, const StateVector& state, double horizon);

} // namespace qdsys
