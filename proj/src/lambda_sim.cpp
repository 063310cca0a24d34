#include "qdsys/lambda_sim.hpp"

#include "qdsys/random.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace qdsys {

namespace {

const Complex kI{0.0, 1.0};

Operator level_projector(int level) {
    Operator m = Operator::Zero(3, 3);
    m(level - 1, level - 1) = 1.0;
    return m;
}

// |to><from| on one atom
Operator level_transfer(int to, int from) {
    Operator m = Operator::Zero(3, 3);
    m(to - 1, from - 1) = 1.0;
    return m;
}

Operator annihilation(int cutoff) {
    Operator a = Operator::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Operator single_atom_stokes(const LambdaParams& p, int atom) {
    return lift_local(level_transfer(3, 2), atom, p.shape());
}

Operator assemble_hamiltonian(const LambdaParams& p) {
    const HilbertShape shape = p.shape();
    const int cavity_site = 2;
    Operator h = Operator::Zero(shape.total_dim(), shape.total_dim());

    for (int atom = 0; atom < 2; ++atom) {
        h += p.epsilon2 * lift_local(level_projector(2), atom, shape);
        h += p.epsilon3 * lift_local(level_projector(3), atom, shape);
    }
    Operator a = annihilation(p.fock_cutoff);
    h += p.omega_c * lift_local(a.adjoint() * a, cavity_site, shape);

    // g * (a |2><1|_j + a^dag |1><2|_j): photon absorption raises 1 -> 2
    Operator a_full = lift_local(a, cavity_site, shape);
    for (int atom = 0; atom < 2; ++atom) {
        Operator raise = lift_local(level_transfer(2, 1), atom, shape);
        Operator term = a_full * raise;
        h += p.g * (term + term.adjoint());
    }
    return h;
}

Operator effective_generator(const LambdaParams& p) {
    Operator h_eff = assemble_hamiltonian(p);
    Operator a = lift_local(annihilation(p.fock_cutoff), 2, p.shape());
    if (p.individual_jumps) {
        for (int atom = 0; atom < 2; ++atom) {
            Operator l = single_atom_stokes(p, atom);
            h_eff -= 0.5 * kI * p.gamma_s * (l.adjoint() * l);
        }
    } else {
        Operator l = single_atom_stokes(p, 0) + single_atom_stokes(p, 1);
        h_eff -= 0.5 * kI * p.gamma_s * (l.adjoint() * l);
    }
    h_eff -= 0.5 * kI * p.kappa * (a.adjoint() * a);
    return h_eff;
}

// Probability mass sitting on the highest retained Fock state.
double cutoff_population(const LambdaParams& p, const Vector& psi) {
    const int fock_dim = p.fock_cutoff + 1;
    double mass = 0.0;
    for (int atoms = 0; atoms < 9; ++atoms)
        mass += std::norm(psi(atoms * fock_dim + p.fock_cutoff));
    return mass;
}

} // namespace

void LambdaParams::validate() const {
    if (epsilon2 < 0 || epsilon3 < 0 || omega_c < 0 || g < 0 || gamma_s < 0 || kappa < 0)
        throw ValidationError("LambdaParams: rates and energies must be nonnegative");
    if (fock_cutoff < 1) throw ValidationError("LambdaParams: fock_cutoff must be >= 1");
    if (dt <= 0 || t_max <= 0) throw ValidationError("LambdaParams: dt and t_max must be positive");

    // Step-size check: one step must neither rotate phases too far for the
    // integrator nor lose more than a few percent of the norm.
    Eigen::SelfAdjointEigenSolver<Operator> es(assemble_hamiltonian(*this));
    double h_scale = es.eigenvalues().cwiseAbs().maxCoeff();
    double dissipative_scale = 0.5 * (gamma_s * 2.0 + kappa * fock_cutoff);
    if (dt * dissipative_scale > 0.05)
        throw ValidationError("LambdaParams: dt too large, single-step norm loss above 5%");
    if (dt * (h_scale + dissipative_scale) > 0.5)
        throw ValidationError("LambdaParams: dt too large for the spectral range");
}

Operator build_hamiltonian(const LambdaParams& p) {
    p.validate();
    return assemble_hamiltonian(p);
}

Operator stokes_operator(const LambdaParams& p) {
    return single_atom_stokes(p, 0) + single_atom_stokes(p, 1);
}

Operator cavity_operator(const LambdaParams& p) {
    return lift_local(annihilation(p.fock_cutoff), 2, p.shape());
}

Operator excitation_operator(const LambdaParams& p) {
    const HilbertShape shape = p.shape();
    Operator a = annihilation(p.fock_cutoff);
    Operator n = lift_local(a.adjoint() * a, 2, shape);
    for (int atom = 0; atom < 2; ++atom) {
        n += lift_local(level_projector(2), atom, shape);
        n += lift_local(level_projector(3), atom, shape);
    }
    return n;
}

StateVector ground_with_photons(const LambdaParams& p, int n_photons) {
    if (n_photons < 0 || n_photons > p.fock_cutoff)
        throw ValidationError("ground_with_photons: photon number beyond cutoff");
    return StateVector::basis(p.shape(), n_photons);
}

StateVector symmetric_pair_state(const LambdaParams& p, int level) {
    if (level != 2 && level != 3)
        throw ValidationError("symmetric_pair_state: level must be 2 or 3");
    const HilbertShape shape = p.shape();
    const int fock_dim = p.fock_cutoff + 1;
    Vector v = Vector::Zero(shape.total_dim());
    int l = level - 1;
    v((l * 3 + 0) * fock_dim) = 1.0 / std::sqrt(2.0);  // |l,1> (x) |0>
    v((0 * 3 + l) * fock_dim) = 1.0 / std::sqrt(2.0);  // |1,l> (x) |0>
    return StateVector(shape, std::move(v));
}

Vector no_jump_step(const Operator& h_eff, const Vector& psi, double dt) {
    // RK4 on dpsi/dt = -i H_eff psi
    Vector k1 = -kI * (h_eff * psi);
    Vector k2 = -kI * (h_eff * (psi + 0.5 * dt * k1));
    Vector k3 = -kI * (h_eff * (psi + 0.5 * dt * k2));
    Vector k4 = -kI * (h_eff * (psi + dt * k3));
    return psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

TrajectoryRecord run_trajectory(const LambdaParams& p, const StateVector& initial,
                                bool record_states) {
    p.validate();
    const HilbertShape shape = p.shape();
    if (initial.shape() != shape) throw ShapeError("run_trajectory: initial state shape mismatch");
    initial.require_normalized("run_trajectory");

    Operator h_eff = effective_generator(p);
    std::vector<Operator> jump_ops;
    std::vector<JumpChannel> jump_channels;
    std::vector<int> jump_atoms;
    std::vector<double> jump_rates;
    if (p.individual_jumps) {
        for (int atom = 0; atom < 2; ++atom) {
            jump_ops.push_back(single_atom_stokes(p, atom));
            jump_channels.push_back(JumpChannel::stokes);
            jump_atoms.push_back(atom);
            jump_rates.push_back(p.gamma_s);
        }
    } else {
        jump_ops.push_back(stokes_operator(p));
        jump_channels.push_back(JumpChannel::stokes);
        jump_atoms.push_back(-1);
        jump_rates.push_back(p.gamma_s);
    }
    jump_ops.push_back(cavity_operator(p));
    jump_channels.push_back(JumpChannel::cavity);
    jump_atoms.push_back(-1);
    jump_rates.push_back(p.kappa);

    Rng rng(p.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    TrajectoryRecord rec{{}, {}, {}, initial, 0.0};
    Vector psi = initial.amplitudes();
    const int n_steps = static_cast<int>(std::llround(p.t_max / p.dt));

    if (record_states) {
        rec.times.push_back(0.0);
        rec.states.push_back(initial);
    }

    std::vector<double> channel_probs(jump_ops.size());
    for (int step = 0; step < n_steps; ++step) {
        const double t = step * p.dt;

        double p_total = 0.0;
        for (size_t c = 0; c < jump_ops.size(); ++c) {
            channel_probs[c] = p.dt * jump_rates[c] * (jump_ops[c] * psi).squaredNorm();
            p_total += channel_probs[c];
        }

        double u = uniform(rng);
        if (u < p_total) {
            // project onto the channel whose cumulative window holds u
            size_t chosen = 0;
            double acc = 0.0;
            for (size_t c = 0; c < jump_ops.size(); ++c) {
                acc += channel_probs[c];
                if (u < acc) { chosen = c; break; }
            }
            psi = jump_ops[chosen] * psi;
            psi /= psi.norm();
            rec.jumps.push_back({t + p.dt, jump_channels[chosen], jump_atoms[chosen],
                                 StateVector(shape, psi)});
        } else {
            psi = no_jump_step(h_eff, psi, p.dt);
            psi /= psi.norm();
        }

        if (cutoff_population(p, psi) > 1e-12)
            throw CutoffOverflowError("run_trajectory: photon amplitude reached the Fock cutoff");

        if (record_states) {
            rec.times.push_back(t + p.dt);
            rec.states.push_back(StateVector(shape, psi));
        }
    }

    rec.final_state = StateVector(shape, std::move(psi));
    rec.final_time = n_steps * p.dt;
    return rec;
}

PostStokesReport post_stokes_analysis(const LambdaParams& p, const TrajectoryRecord& rec) {
    const JumpEvent* first = nullptr;
    for (const auto& j : rec.jumps)
        if (j.channel == JumpChannel::stokes) { first = &j; break; }
    if (!first) throw ValidationError("post_stokes_analysis: record contains no Stokes jump");

    Operator rho_atoms = reduced_density(first->post_state, {0, 1});
    double purity = (rho_atoms * rho_atoms).trace().real();

    Eigen::SelfAdjointEigenSolver<Operator> es(rho_atoms);
    Eigen::Index top = 0;
    es.eigenvalues().maxCoeff(&top);
    HilbertShape atoms({3, 3});
    Vector dominant = es.eigenvectors().col(top);
    StateVector atomic_state(atoms, dominant / dominant.norm());

    Vector target = Vector::Zero(9);
    target(2 * 3 + 0) = 1.0 / std::sqrt(2.0);  // |3,1>
    target(0 * 3 + 2) = 1.0 / std::sqrt(2.0);  // |1,3>
    double fid = target.dot(rho_atoms * target).real();

    ObservableSet pair13 = two_level_pair_set(1, 3);
    CeCheckResult ce = ce_check(pair13, atomic_state);
    double total = total_variance(pair13, atomic_state).total;

    Operator atomic_h = Operator::Zero(9, 9);
    for (int atom = 0; atom < 2; ++atom) {
        atomic_h += p.epsilon2 * lift_local(level_projector(2), atom, atoms);
        atomic_h += p.epsilon3 * lift_local(level_projector(3), atom, atoms);
    }
    double energy = (atomic_h * rho_atoms).trace().real();

    return PostStokesReport{.jump_time = first->time,
                            .fidelity = fid,
                            .atomic_purity = purity,
                            .is_ce = ce.is_ce,
                            .residual = ce.residual,
                            .total_variance = total,
                            .atomic_energy = energy,
                            .atomic_state = std::move(atomic_state)};
}

double stability_check(const LambdaParams& p, const StateVector& state, double horizon) {
    p.validate();
    if (state.shape() != p.shape()) throw ShapeError("stability_check: state shape mismatch");
    state.require_normalized("stability_check");

    Operator h_eff = effective_generator(p);
    Vector psi = state.amplitudes();
    const int n_steps = static_cast<int>(std::llround(horizon / p.dt));
    for (int step = 0; step < n_steps; ++step) psi = no_jump_step(h_eff, psi, p.dt);

    double n = psi.norm();
    if (n < 1e-150) return 1.0;
    double overlap = std::norm(state.amplitudes().dot(psi / n));
    return 1.0 - overlap;
}

} // namespace qdsys
