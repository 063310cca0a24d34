// qdsys command-line tool: variance and CE analysis of states against
// observable sets, CE search, SLOCC measures and classification, the
// qutrit embedding, normal forms, and the Lambda-cavity trajectory runs.
//
// Exit codes: 0 success, 2 parse error, 3 shape mismatch, 4 search found
// nothing, 5 numeric overflow.

#include "qdsys/fixtures.hpp"
#include "qdsys/lambda_sim.hpp"
#include "qdsys/maps.hpp"
#include "qdsys/observables.hpp"
#include "qdsys/random.hpp"
#include "qdsys/slocc.hpp"
#include "qdsys/state_io.hpp"
#include "qdsys/variance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace qdsys;

constexpr int kExitParse = 2;
constexpr int kExitShape = 3;
constexpr int kExitNotFound = 4;
constexpr int kExitOverflow = 5;

void emit(const json& payload, bool as_json) {
    if (as_json) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : payload.items()) {
        if (value.is_structured()) std::cout << key << " = " << value.dump() << "\n";
        else std::cout << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

json variance_payload(const VarianceReport& rep) {
    json per = json::object();
    for (const auto& [label, var] : rep.per_observable) per[label] = var;
    json j;
    j["per_observable"] = per;
    j["total_variance"] = rep.total;
    if (rep.casimir) j["casimir"] = *rep.casimir;
    j["residual"] = rep.residual;
    j["is_ce"] = rep.is_ce;
    return j;
}

LambdaParams read_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open params file: " + path);
    LambdaParams p;
    bool omega_given = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string key, eq, value;
        std::istringstream ls(line);
        if (!(ls >> key)) continue;
        if (!(ls >> eq >> value) || eq != "=")
            throw ParseError("params file line " + std::to_string(line_no) + ": want 'key = value'");
        try {
            if (key == "epsilon2") p.epsilon2 = std::stod(value);
            else if (key == "epsilon3") p.epsilon3 = std::stod(value);
            else if (key == "omega_c") { p.omega_c = std::stod(value); omega_given = true; }
            else if (key == "g") p.g = std::stod(value);
            else if (key == "gamma_s") p.gamma_s = std::stod(value);
            else if (key == "kappa") p.kappa = std::stod(value);
            else if (key == "fock_cutoff") p.fock_cutoff = std::stoi(value);
            else if (key == "dt") p.dt = std::stod(value);
            else if (key == "t_max") p.t_max = std::stod(value);
            else if (key == "seed") p.seed = std::stoull(value);
            else if (key == "individual_jumps") p.individual_jumps = (value == "true" || value == "1");
            else throw ParseError("params file: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw ParseError("params file: bad value for '" + key + "'");
        }
    }
    if (!omega_given) p.omega_c = p.epsilon2;  // resonance default
    return p;
}

struct CliState {
    bool as_json = false;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    std::string export_path;
};

int run_commands(int argc, char** argv) {
    CLI::App app{"Entanglement analysis relative to Lie-algebra observable bases"};
    app.require_subcommand(1);

    CliState st;
    app.add_flag("--json", st.as_json, "emit machine-readable JSON");
    app.add_option("--tol", st.tol, "tolerance for CE decisions");
    app.add_option("--seed", st.seed, "master seed for randomized searches");
    app.add_option("--export", st.export_path, "write the primary artifact to this path");

    std::string state_arg, obs_id, kind = "concurrence", params_path;
    int n_starts = 32, n_traj = 100;

    auto* cmd_variance = app.add_subcommand("variance", "per-observable and total variance");
    cmd_variance->add_option("state", state_arg, "state file or fixture name")->required();
    cmd_variance->add_option("--obs", obs_id, "observable set id")->required();

    auto* cmd_ce = app.add_subcommand("ce-check", "vanishing-expectation test");
    cmd_ce->add_option("state", state_arg)->required();
    cmd_ce->add_option("--obs", obs_id)->required();

    auto* cmd_find = app.add_subcommand("find-ce", "search for a completely entangled state");
    cmd_find->add_option("--obs", obs_id)->required();
    cmd_find->add_option("--starts", n_starts, "number of optimizer starts");

    auto* cmd_measure = app.add_subcommand("measure", "entanglement measure of a state");
    cmd_measure->add_option("state", state_arg)->required();
    cmd_measure->add_option("--kind", kind, "concurrence | tangle | orbit");

    auto* cmd_classify = app.add_subcommand("classify", "three-qubit SLOCC class");
    cmd_classify->add_option("state", state_arg)->required();

    auto* cmd_embed = app.add_subcommand("embed", "qutrit to symmetric two-qubit image");
    cmd_embed->add_option("state", state_arg)->required();

    auto* cmd_nf = app.add_subcommand("normal-form", "minimal orbit representative");
    cmd_nf->add_option("state", state_arg)->required();

    bool individual_jumps = false;
    std::string snapshots_path;
    int snapshot_stride = 100;
    auto* cmd_sim = app.add_subcommand("simulate", "Lambda-cavity trajectory ensemble");
    cmd_sim->add_option("--params", params_path, "key = value parameter file");
    cmd_sim->add_option("--trajectories", n_traj, "ensemble size");
    cmd_sim->add_flag("--individual-jumps", individual_jumps, "per-atom Stokes channels");
    cmd_sim->add_option("--snapshots", snapshots_path, "state snapshots of trajectory 0");
    cmd_sim->add_option("--snapshot-stride", snapshot_stride, "steps between snapshots");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (*cmd_variance) {
        StateVector psi = load_state_arg(state_arg);
        ObservableSet set = set_from_name(obs_id);
        emit(variance_payload(total_variance(set, psi, st.tol)), st.as_json);
    } else if (*cmd_ce) {
        StateVector psi = load_state_arg(state_arg);
        ObservableSet set = set_from_name(obs_id);
        CeCheckResult r = ce_check(set, psi, st.tol);
        emit({{"is_ce", r.is_ce}, {"residual", r.residual}, {"max_expectation", r.max_expectation}},
             st.as_json);
    } else if (*cmd_find) {
        ObservableSet set = set_from_name(obs_id);
        FindCeOptions opts;
        opts.n_starts = n_starts;
        opts.tol = st.tol;
        opts.seed = st.seed;
        FindCeResult r = find_ce(set, opts);
        json j{{"found", r.found()}, {"best_residual", r.best_residual}, {"starts_run", r.starts_run}};
        if (!r.found()) {
            emit(j, st.as_json);
            return kExitNotFound;
        }
        VarianceReport rep = total_variance(set, *r.state, st.tol);
        j["total_variance"] = rep.total;
        if (rep.casimir) j["casimir"] = *rep.casimir;
        if (!st.export_path.empty()) {
            write_state_file(st.export_path, *r.state, "find-ce " + obs_id);
            j["state_file"] = st.export_path;
        } else {
            std::ostringstream buf;
            write_state(buf, *r.state, "find-ce " + obs_id);
            j["state"] = json::parse(buf.str());
        }
        emit(j, st.as_json);
    } else if (*cmd_measure) {
        StateVector psi = load_state_arg(state_arg);
        double value = 0.0;
        if (kind == "concurrence") value = concurrence(psi);
        else if (kind == "tangle") value = three_tangle(psi);
        else if (kind == "orbit") value = orbit_measure(psi);
        else throw CLI::ValidationError("--kind", "unknown measure kind '" + kind + "'");
        emit({{"kind", kind}, {"value", value}}, st.as_json);
    } else if (*cmd_classify) {
        StateVector psi = load_state_arg(state_arg);
        SloccClass cls = classify_three_qubit(psi, st.tol < 1e-9 ? st.tol : 1e-9);
        json j{{"class", cls.to_string()}};
        if (cls.separated_site) j["separated_site"] = *cls.separated_site;
        emit(j, st.as_json);
    } else if (*cmd_embed) {
        StateVector psi = load_state_arg(state_arg);
        EmbeddingReport rep = qutrit_to_two_qubits(psi);
        json j{{"concurrence_of_image", rep.concurrence_of_image}};
        if (!st.export_path.empty()) {
            write_state_file(st.export_path, rep.output, "embedded " + state_arg);
            j["state_file"] = st.export_path;
        } else {
            std::ostringstream buf;
            write_state(buf, rep.output, "embedded " + state_arg);
            j["state"] = json::parse(buf.str());
        }
        emit(j, st.as_json);
    } else if (*cmd_nf) {
        StateVector psi = load_state_arg(state_arg);
        NormalFormResult r = sl_normal_form(psi);
        json j{{"converged", r.converged},
               {"norm_sq", r.norm_sq},
               {"orbit_measure", r.converged ? r.norm_sq : 0.0},
               {"sweeps", r.sweeps}};
        if (!st.export_path.empty() && r.converged) {
            write_state_file(st.export_path, r.state, "normal-form " + state_arg);
            j["state_file"] = st.export_path;
        }
        emit(j, st.as_json);
    } else if (*cmd_sim) {
        LambdaParams base = params_path.empty() ? LambdaParams{} : read_params_file(params_path);
        if (individual_jumps) base.individual_jumps = true;
        if (app.count("--seed")) base.seed = st.seed;
        base.validate();

        std::ofstream jump_table;
        if (!st.export_path.empty()) {
            jump_table.open(st.export_path);
            if (!jump_table) throw ParseError("cannot open export file: " + st.export_path);
            jump_table << "trajectory,time,channel,atom\n";
        }

        int with_stokes = 0, ce_pass = 0;
        double sum_jump_time = 0, sum_fidelity = 0, sum_variance = 0;
        for (int i = 0; i < n_traj; ++i) {
            LambdaParams p = base;
            p.seed = derived_rng(base.seed, static_cast<std::uint64_t>(i))();
            bool want_snapshots = (i == 0 && !snapshots_path.empty());
            TrajectoryRecord rec = run_trajectory(p, want_snapshots);
            if (want_snapshots) {
                if (snapshot_stride < 1) snapshot_stride = 1;
                json snaps = json::array();
                for (size_t k = 0; k < rec.states.size();
                     k += static_cast<size_t>(snapshot_stride)) {
                    std::ostringstream buf;
                    write_state(buf, rec.states[k]);
                    snaps.push_back({{"time", rec.times[k]}, {"state", json::parse(buf.str())}});
                }
                std::ofstream snap_out(snapshots_path);
                if (!snap_out) throw ParseError("cannot open snapshots file: " + snapshots_path);
                snap_out << snaps.dump(2) << "\n";
            }
            if (jump_table.is_open())
                for (const auto& jmp : rec.jumps)
                    jump_table << i << "," << jmp.time << ","
                               << (jmp.channel == JumpChannel::stokes ? "stokes" : "cavity") << ","
                               << jmp.atom << "\n";
            bool has_stokes = false;
            for (const auto& jmp : rec.jumps)
                if (jmp.channel == JumpChannel::stokes) { has_stokes = true; break; }
            if (!has_stokes) continue;
            PostStokesReport rep = post_stokes_analysis(base, rec);
            ++with_stokes;
            sum_jump_time += rep.jump_time;
            sum_fidelity += rep.fidelity;
            sum_variance += rep.total_variance;
            if (rep.is_ce) ++ce_pass;
        }

        json j{{"trajectories", n_traj}, {"with_stokes_jump", with_stokes}};
        if (with_stokes > 0) {
            j["mean_first_stokes_time"] = sum_jump_time / with_stokes;
            j["mean_post_jump_fidelity"] = sum_fidelity / with_stokes;
            j["ce_pass_rate"] = static_cast<double>(ce_pass) / with_stokes;
            j["mean_total_variance"] = sum_variance / with_stokes;
        }
        emit(j, st.as_json);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_commands(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const CutoffOverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
