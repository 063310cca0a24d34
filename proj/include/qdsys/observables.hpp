// observables.hpp
// Constructors for the observable bases the analysis runs against: per-site
// Pauli sets, the spin-1 triple, the su(3) generator octet, embedded
// two-level pairs inside three-level atoms, and validated custom bases.
//
// A set carries its Casimir scalar (sum of squared generators) when that sum
// is a multiple of the identity on the full space; embedded pair sets carry
// an effective Casimir valid on the two-level subspace they act on.

#pragma once

#include "qdsys/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdsys {

struct Observable {
    Operator matrix;             // Hermitian, full-space dimension
    std::optional<int> site;     // locality tag; absent = global
    std::string label;
};

enum class CasimirKind {
    none,      // sum of squares is not scalar, no value attached
    exact,     // sum of squares == casimir * I on the full space
    effective  // scalar only on the intended subspace (embedded pair sets)
};

class ObservableSet {
public:
    ObservableSet(HilbertShape shape, std::vector<Observable> observables,
                  CasimirKind kind, double casimir, std::string name);

    const HilbertShape& shape() const { return shape_; }
    const std::vector<Observable>& observables() const { return obs_; }
    int size() const { return static_cast<int>(obs_.size()); }
    const std::string& name() const { return name_; }

    std::optional<double> casimir_scalar() const {
        if (kind_ == CasimirKind::none) return std::nullopt;
        return casimir_;
    }
    CasimirKind casimir_kind() const { return kind_; }

    // Common Hilbert-Schmidt norm Tr(X^2) shared by all members.
    double hs_norm_sq() const { return hs_norm_sq_; }

private:
    HilbertShape shape_;
    std::vector<Observable> obs_;
    CasimirKind kind_;
    double casimir_;
    double hs_norm_sq_;
    std::string name_;
};

// Pauli matrices (physics normalization, Tr(s^2) = 2).
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

// 3 n_sites observables {sigma_x,y,z on each site}; Casimir 3*n_sites.
ObservableSet pauli_set(int n_sites);

// The spin-1 triple S_x, S_y, S_z on a single qutrit; Casimir 2.
ObservableSet spin1_set();

// The eight su(3) generators on a single qutrit; Casimir 16/3.
ObservableSet gell_mann_set();

// Pauli-like operators on a chosen pair of levels of three-level atoms,
// zero elsewhere, lifted to n_atoms sites. Levels are 1-based (1,2,3).
// Carries effective Casimir 3*n_atoms, valid on the pair subspace.
ObservableSet two_level_pair_set(int level_a, int level_b, int n_atoms = 2);

// Validates Hermiticity, pairwise HS-orthogonality and equal HS norms;
// attaches the Casimir scalar iff the squared sum is scalar within 1e-10.
ObservableSet custom_set(const std::vector<Operator>& matrices, const HilbertShape& shape,
                         const std::string& name = "custom");

// Named set identifiers: "pauli:<n>", "spin1", "su3", "pair:<a><b>".
ObservableSet set_from_name(const std::string& id);

} // namespace qdsys
