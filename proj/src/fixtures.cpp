#include "qdsys/fixtures.hpp"

#include "qdsys/maps.hpp"

#include <cmath>

namespace qdsys {

namespace {

StateVector qutrit_mix(Complex c_plus, Complex c_zero, Complex c_minus) {
    Vector v(3);
    v << c_plus, c_zero, c_minus;
    return StateVector(HilbertShape({3}), v / v.norm());
}

} // namespace

std::optional<StateVector> fixture_state(const std::string& name) {
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "spin1:0" || name == "pion:0") return qutrit_mix(0, 1, 0);
    if (name == "spin1:+") return qutrit_mix(r, 0, r);
    if (name == "spin1:-") return qutrit_mix(r, 0, -r);
    if (name == "biphoton:0") return biphoton_basis()[1];
    if (name == "bell:phi+") {
        Vector v = Vector::Zero(4);
        v(0) = r;
        v(3) = r;
        return StateVector(HilbertShape({2, 2}), std::move(v));
    }
    if (name == "ghz") {
        Vector v = Vector::Zero(8);
        v(0) = r;
        v(7) = r;
        return StateVector(HilbertShape({2, 2, 2}), std::move(v));
    }
    if (name == "w") {
        Vector v = Vector::Zero(8);
        v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
        return StateVector(HilbertShape({2, 2, 2}), std::move(v));
    }
    return std::nullopt;
}

std::vector<std::string> fixture_names() {
    return {"spin1:0", "spin1:+", "spin1:-", "pion:0", "biphoton:0", "bell:phi+", "ghz", "w"};
}

} // namespace qdsys
