#include "qdsys/lambda_sim.hpp"

#include "support/test_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qdsys;
using qdsys::testing::max_abs;

namespace {

LambdaParams defaults() { return LambdaParams{}; }

// Rabi angular frequency of the one-photon exchange block.
double exchange_frequency(const LambdaParams& p) { return p.g * std::sqrt(2.0); }

StateVector antisymmetric_pair(const LambdaParams& p) {
    const int fock_dim = p.fock_cutoff + 1;
    Vector v = Vector::Zero(p.shape().total_dim());
    v((1 * 3 + 0) * fock_dim) = 1.0 / std::sqrt(2.0);   // |2,1> (x) |0>
    v((0 * 3 + 1) * fock_dim) = -1.0 / std::sqrt(2.0);  // |1,2> (x) |0>
    return StateVector(p.shape(), std::move(v));
}

int count_jumps(const TrajectoryRecord& rec, JumpChannel channel) {
    int n = 0;
    for (const auto& j : rec.jumps)
        if (j.channel == channel) ++n;
    return n;
}

} // namespace

TEST_SUITE("lambda-sim") {

TEST_CASE("bare eigenstate carries the cavity energy") {
    LambdaParams p = defaults();
    p.g = 0.0;
    Operator h = build_hamiltonian(p);
    StateVector ground1 = ground_with_photons(p, 1);
    Vector applied = h * ground1.amplitudes();
    CHECK((applied - p.omega_c * ground1.amplitudes()).norm() < 1e-12);
}

TEST_CASE("photon exchange couples only the symmetric pair") {
    LambdaParams p = defaults();
    Operator h = build_hamiltonian(p);
    CHECK(max_abs(h - h.adjoint()) < 1e-12);

    StateVector ground1 = ground_with_photons(p, 1);
    StateVector sym = symmetric_pair_state(p, 2);
    StateVector antisym = antisymmetric_pair(p);

    Complex coupling = sym.amplitudes().dot(h * ground1.amplitudes());
    CHECK(std::abs(coupling - Complex(p.g * std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(antisym.amplitudes().dot(h * ground1.amplitudes())) < 1e-14);
}

TEST_CASE("step-size and parameter validation") {
    LambdaParams p = defaults();
    p.dt = 2.0;
    CHECK_THROWS_AS(build_hamiltonian(p), ValidationError);
    p = defaults();
    p.gamma_s = -0.1;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = defaults();
    p.fock_cutoff = 0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}

TEST_CASE("closed dynamics oscillates between photon and shared excitation") {
    LambdaParams p = defaults();
    p.gamma_s = 0.0;
    p.kappa = 0.0;
    p.t_max = 60.0;
    TrajectoryRecord rec = run_trajectory(p, true);
    CHECK(rec.jumps.empty());

    StateVector target = symmetric_pair_state(p, 2);
    const double period = 2.0 * M_PI / (2.0 * exchange_frequency(p));

    // locate fidelity peaks
    std::vector<double> peak_times;
    std::vector<double> fid(rec.states.size());
    for (size_t i = 0; i < rec.states.size(); ++i) fid[i] = fidelity(target, rec.states[i]);
    for (size_t i = 1; i + 1 < fid.size(); ++i)
        if (fid[i] > 0.99 && fid[i] >= fid[i - 1] && fid[i] >= fid[i + 1])
            peak_times.push_back(rec.times[i]);

    REQUIRE(peak_times.size() >= 4);
    for (size_t i = 0; i + 1 < peak_times.size(); ++i) {
        double gap = peak_times[i + 1] - peak_times[i];
        CHECK(std::abs(gap - period) / period < 0.01);
    }

    // the shared-excitation state is periodically reached almost exactly
    double best = *std::max_element(fid.begin(), fid.end());
    CHECK(best > 0.999);

    // energy stays put without decay channels
    Operator h = build_hamiltonian(p);
    double e0 = expectation(h, rec.states.front()).real();
    for (size_t i = 0; i < rec.states.size(); i += 50)
        CHECK(std::abs(expectation(h, rec.states[i]).real() - e0) < 1e-8);
}

TEST_CASE("first decay click produces the robust pair exactly") {
    LambdaParams p = defaults();
    p.seed = 31;
    TrajectoryRecord rec = run_trajectory(p);
    REQUIRE(!rec.jumps.empty());
    CHECK(rec.jumps.front().channel == JumpChannel::stokes);

    PostStokesReport rep = post_stokes_analysis(p, rec);
    CHECK(rep.fidelity > 0.999);
    CHECK(rep.atomic_purity > 0.999);
    CHECK(rep.is_ce);
    CHECK(rep.total_variance == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(rep.atomic_energy == doctest::Approx(p.epsilon3).epsilon(1e-6));
}

TEST_CASE("a lossy cavity without Stokes decay never clicks Stokes") {
    LambdaParams p = defaults();
    p.gamma_s = 0.0;
    p.kappa = 1.0;
    p.dt = 0.02;
    p.t_max = 80.0;
    TrajectoryRecord rec = run_trajectory(p);
    CHECK(count_jumps(rec, JumpChannel::stokes) == 0);
    CHECK_THROWS_AS(post_stokes_analysis(p, rec), ValidationError);
}

TEST_CASE("per-atom emission heralds a product state instead") {
    LambdaParams p = defaults();
    p.individual_jumps = true;
    p.seed = 77;
    TrajectoryRecord rec = run_trajectory(p);
    PostStokesReport rep = post_stokes_analysis(p, rec);
    CHECK(rep.fidelity == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(!rep.is_ce);
}

TEST_CASE("stability of the heralded pair") {
    LambdaParams p = defaults();
    CHECK(stability_check(p, symmetric_pair_state(p, 3), 40.0) < 1e-6);
    CHECK(stability_check(p, ground_with_photons(p, 0), 40.0) < 1e-12);

    double quarter = 0.25 * 2.0 * M_PI / (2.0 * exchange_frequency(p));
    double deviation = stability_check(p, symmetric_pair_state(p, 2), quarter);
    CHECK(deviation > 0.3);
}

TEST_CASE("no-jump norm decays monotonically") {
    LambdaParams p = defaults();
    Operator h_eff = build_hamiltonian(p);
    {
        Operator l = stokes_operator(p);
        Operator a = cavity_operator(p);
        h_eff -= Complex(0, 0.5) * (p.gamma_s * (l.adjoint() * l) + p.kappa * (a.adjoint() * a));
    }
    Vector psi = ground_with_photons(p, 1).amplitudes();
    double prev = 1.0;
    for (int step = 0; step < 400; ++step) {
        psi = no_jump_step(h_eff, psi, p.dt);
        double n = psi.norm();
        CHECK(n <= prev + 1e-12);
        prev = n;
    }
    CHECK(prev < 1.0);
}

TEST_CASE("excitation count plus cavity clicks is conserved") {
    LambdaParams p = defaults();
    p.kappa = 0.05;
    p.t_max = 80.0;
    p.seed = 5;
    TrajectoryRecord rec = run_trajectory(p, true);
    Operator n_op = excitation_operator(p);

    for (size_t i = 0; i < rec.states.size(); i += 25) {
        CHECK(std::abs(rec.states[i].squared_norm() - 1.0) < 1e-9);
        int cavity_clicks = 0;
        for (const auto& j : rec.jumps)
            if (j.channel == JumpChannel::cavity && j.time <= rec.times[i] + 1e-12) ++cavity_clicks;
        double n = expectation(n_op, rec.states[i]).real();
        CHECK(std::abs(n + cavity_clicks - 1.0) < 1e-6);
    }
}

TEST_CASE("identical seeds reproduce the jump record bit for bit") {
    LambdaParams p = defaults();
    p.kappa = 0.02;
    p.seed = 123;
    TrajectoryRecord a = run_trajectory(p);
    TrajectoryRecord b = run_trajectory(p);
    REQUIRE(a.jumps.size() == b.jumps.size());
    for (size_t i = 0; i < a.jumps.size(); ++i) {
        CHECK(a.jumps[i].time == b.jumps[i].time);
        CHECK(a.jumps[i].channel == b.jumps[i].channel);
        CHECK((a.jumps[i].post_state.amplitudes() - b.jumps[i].post_state.amplitudes()).norm() ==
              0.0);
    }
    CHECK((a.final_state.amplitudes() - b.final_state.amplitudes()).norm() == 0.0);
}

TEST_CASE("cutoff overflow is an error, not a truncation") {
    LambdaParams p = defaults();
    p.fock_cutoff = 1;  // the single photon sits exactly at the cutoff
    CHECK_THROWS_AS(run_trajectory(p, ground_with_photons(p, 1)), CutoffOverflowError);
}

TEST_CASE("first-click times follow the averaged-rate exponential") {
    LambdaParams p = defaults();
    p.g = 0.4;        // fast exchange averages the emission rate cleanly
    p.gamma_s = 0.1;
    p.dt = 0.02;
    p.t_max = 150.0;

    const int n_traj = 500;
    std::vector<double> first_times;
    for (int i = 0; i < n_traj; ++i) {
        LambdaParams q = p;
        q.seed = derived_rng(2718, static_cast<std::uint64_t>(i))();
        TrajectoryRecord rec = run_trajectory(q);
        for (const auto& j : rec.jumps)
            if (j.channel == JumpChannel::stokes) {
                first_times.push_back(j.time);
                break;
            }
    }
    REQUIRE(static_cast<int>(first_times.size()) >= n_traj - 2);

    // while the excitation shuttles, emission sees the time-averaged rate
    const double rate = 0.5 * p.gamma_s;
    std::sort(first_times.begin(), first_times.end());
    double ks = 0.0;
    const double n = static_cast<double>(first_times.size());
    for (size_t i = 0; i < first_times.size(); ++i) {
        double model = 1.0 - std::exp(-rate * first_times[i]);
        ks = std::max(ks, std::abs(model - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(model - static_cast<double>(i + 1) / n));
    }
    CHECK(ks < 0.1);
}

} // TEST_SUITE
