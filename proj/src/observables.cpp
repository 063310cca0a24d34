#include "qdsys/observables.hpp"

#include <cmath>

namespace qdsys {

namespace {

const Complex kI{0.0, 1.0};

double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

// Checks the constructor invariants shared by every set.
void validate_set(const HilbertShape& shape, const std::vector<Observable>& obs,
                  double& hs_norm_sq_out) {
    if (obs.empty()) throw ValidationError("ObservableSet: empty");
    const int d = shape.total_dim();
    for (const auto& o : obs) {
        if (o.matrix.rows() != d || o.matrix.cols() != d)
            throw ShapeError("ObservableSet: observable dimension mismatch");
        if (max_abs(o.matrix - o.matrix.adjoint()) > 1e-12)
            throw ValidationError("ObservableSet: observable '" + o.label + "' is not Hermitian");
    }
    const int n = static_cast<int>(obs.size());
    double norm0 = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex hs = (obs[i].matrix.adjoint() * obs[j].matrix).trace();
            if (i == j) {
                if (i == 0) norm0 = hs.real();
                else if (std::abs(hs.real() - norm0) > 1e-10)
                    throw ValidationError("ObservableSet: unequal Hilbert-Schmidt norms");
            } else if (std::abs(hs) > 1e-10) {
                throw ValidationError("ObservableSet: observables '" + obs[i].label + "' and '" +
                                      obs[j].label + "' are not HS-orthogonal");
            }
        }
    }
    hs_norm_sq_out = norm0;
}

Operator sum_of_squares(const std::vector<Observable>& obs) {
    Operator s = Operator::Zero(obs[0].matrix.rows(), obs[0].matrix.cols());
    for (const auto& o : obs) s += o.matrix * o.matrix;
    return s;
}

} // namespace

ObservableSet::ObservableSet(HilbertShape shape, std::vector<Observable> observables,
                             CasimirKind kind, double casimir, std::string name)
    : shape_(std::move(shape)), obs_(std::move(observables)), kind_(kind), casimir_(casimir),
      name_(std::move(name)) {
    validate_set(shape_, obs_, hs_norm_sq_);
    if (kind_ == CasimirKind::exact) {
        Operator defect = sum_of_squares(obs_) -
                          casimir_ * Operator::Identity(shape_.total_dim(), shape_.total_dim());
        if (max_abs(defect) > 1e-10)
            throw ValidationError("ObservableSet: sum of squares is not the stated scalar");
    }
}

Operator pauli_x() {
    Operator m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Operator pauli_y() {
    Operator m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Operator pauli_z() {
    Operator m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ObservableSet pauli_set(int n_sites) {
    if (n_sites < 1) throw ValidationError("pauli_set: n_sites must be >= 1");
    HilbertShape shape(std::vector<int>(static_cast<size_t>(n_sites), 2));
    const Operator paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
    const char* names[3] = {"sx", "sy", "sz"};
    std::vector<Observable> obs;
    for (int j = 0; j < n_sites; ++j)
        for (int a = 0; a < 3; ++a)
            obs.push_back({lift_local(paulis[a], j, shape), j,
                           std::string(names[a]) + "[" + std::to_string(j) + "]"});
    return ObservableSet(shape, std::move(obs), CasimirKind::exact, 3.0 * n_sites,
                         "pauli:" + std::to_string(n_sites));
}

ObservableSet spin1_set() {
    const double r = 1.0 / std::sqrt(2.0);
    Operator sx(3, 3), sy(3, 3), sz(3, 3);
    sx << 0, r, 0,
          r, 0, r,
          0, r, 0;
    sy << 0, -kI * r, 0,
          kI * r, 0, -kI * r,
          0, kI * r, 0;
    sz << 1, 0, 0,
          0, 0, 0,
          0, 0, -1;
    HilbertShape shape({3});
    std::vector<Observable> obs = {{sx, 0, "Sx"}, {sy, 0, "Sy"}, {sz, 0, "Sz"}};
    return ObservableSet(shape, std::move(obs), CasimirKind::exact, 2.0, "spin1");
}

ObservableSet gell_mann_set() {
    std::vector<Operator> g(8, Operator::Zero(3, 3));
    g[0] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
    g[1] << 0, -kI, 0, kI, 0, 0, 0, 0, 0;
    g[2] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
    g[3] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
    g[4] << 0, 0, -kI, 0, 0, 0, kI, 0, 0;
    g[5] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
    g[6] << 0, 0, 0, 0, 0, -kI, 0, kI, 0;
    const double r3 = 1.0 / std::sqrt(3.0);
    g[7] << r3, 0, 0, 0, r3, 0, 0, 0, -2.0 * r3;

    HilbertShape shape({3});
    std::vector<Observable> obs;
    for (int a = 0; a < 8; ++a)
        obs.push_back({g[static_cast<size_t>(a)], 0, "l" + std::to_string(a + 1)});
    return ObservableSet(shape, std::move(obs), CasimirKind::exact, 16.0 / 3.0, "su3");
}

ObservableSet two_level_pair_set(int level_a, int level_b, int n_atoms) {
    if (level_a < 1 || level_a > 3 || level_b < 1 || level_b > 3 || level_a == level_b)
        throw ValidationError("two_level_pair_set: levels must be distinct members of {1,2,3}");
    if (n_atoms < 1) throw ValidationError("two_level_pair_set: n_atoms must be >= 1");
    int lo = std::min(level_a, level_b) - 1;  // plays the role of the lower level
    int hi = std::max(level_a, level_b) - 1;

    Operator sx = Operator::Zero(3, 3), sy = Operator::Zero(3, 3), sz = Operator::Zero(3, 3);
    sx(hi, lo) = 1.0;  sx(lo, hi) = 1.0;
    sy(hi, lo) = -kI;  sy(lo, hi) = kI;
    sz(hi, hi) = 1.0;  sz(lo, lo) = -1.0;

    HilbertShape shape(std::vector<int>(static_cast<size_t>(n_atoms), 3));
    const Operator ops[3] = {sx, sy, sz};
    const char* names[3] = {"sx", "sy", "sz"};
    std::string suffix = std::to_string(std::min(level_a, level_b)) +
                         std::to_string(std::max(level_a, level_b));
    std::vector<Observable> obs;
    for (int j = 0; j < n_atoms; ++j)
        for (int a = 0; a < 3; ++a)
            obs.push_back({lift_local(ops[a], j, shape), j,
                           std::string(names[a]) + suffix + "[" + std::to_string(j) + "]"});
    // Sum of squares is a projector multiple, not scalar, on the full
    // three-level space; 3*n_atoms is the value on the pair subspace.
    return ObservableSet(shape, std::move(obs), CasimirKind::effective, 3.0 * n_atoms,
                         "pair:" + suffix);
}

ObservableSet custom_set(const std::vector<Operator>& matrices, const HilbertShape& shape,
                         const std::string& name) {
    std::vector<Observable> obs;
    for (size_t i = 0; i < matrices.size(); ++i)
        obs.push_back({matrices[i], std::nullopt, "X" + std::to_string(i)});
    // Probe scalarness of the squared sum before committing to a kind.
    ObservableSet probe(shape, obs, CasimirKind::none, 0.0, name);
    Operator s = Operator::Zero(shape.total_dim(), shape.total_dim());
    for (const auto& m : matrices) s += m * m;
    double c = s.trace().real() / shape.total_dim();
    Operator defect = s - c * Operator::Identity(shape.total_dim(), shape.total_dim());
    if (defect.cwiseAbs().maxCoeff() < 1e-10)
        return ObservableSet(shape, std::move(obs), CasimirKind::exact, c, name);
    return probe;
}

ObservableSet set_from_name(const std::string& id) {
    if (id == "spin1") return spin1_set();
    if (id == "su3") return gell_mann_set();
    if (id.rfind("pauli:", 0) == 0) {
        int n = std::stoi(id.substr(6));
        return pauli_set(n);
    }
    if (id.rfind("pair:", 0) == 0) {
        std::string lv = id.substr(5);
        if (lv.size() != 2 || !isdigit(lv[0]) || !isdigit(lv[1]))
            throw ValidationError("set_from_name: pair set wants two level digits, e.g. pair:13");
        return two_level_pair_set(lv[0] - '0', lv[1] - '0');
    }
    throw ValidationError("set_from_name: unknown observable set '" + id + "'");
}

} // namespace qdsys
