#include "qdsys/observables.hpp"

#include "support/test_helpers.hpp"

#include <doctest.h>

using namespace qdsys;
using qdsys::testing::max_abs;

namespace {

Operator sum_squares(const ObservableSet& set) {
    int d = set.shape().total_dim();
    Operator s = Operator::Zero(d, d);
    for (const auto& o : set.observables()) s += o.matrix * o.matrix;
    return s;
}

void check_casimir(const ObservableSet& set, double expected) {
    REQUIRE(set.casimir_scalar().has_value());
    CHECK(*set.casimir_scalar() == doctest::Approx(expected).epsilon(1e-12));
    if (set.casimir_kind() == CasimirKind::exact) {
        int d = set.shape().total_dim();
        CHECK(max_abs(sum_squares(set) - expected * Operator::Identity(d, d)) < 1e-10);
    }
}

} // namespace

TEST_SUITE("observables") {

TEST_CASE("pauli sets carry 3 observables per site and Casimir 3n") {
    for (int n : {1, 2, 3}) {
        ObservableSet set = pauli_set(n);
        CHECK(set.size() == 3 * n);
        check_casimir(set, 3.0 * n);
    }
}

TEST_CASE("spin-1 matrices") {
    ObservableSet set = spin1_set();
    REQUIRE(set.size() == 3);
    const Operator& sx = set.observables()[0].matrix;
    const Operator& sy = set.observables()[1].matrix;
    const Operator& sz = set.observables()[2].matrix;

    Operator sz_expect(3, 3);
    sz_expect << 1, 0, 0, 0, 0, 0, 0, 0, -1;
    CHECK(max_abs(sz - sz_expect) == 0.0);

    check_casimir(set, 2.0);

    // su(2) commutation table [S_a, S_b] = i eps_abc S_c
    const Complex i{0, 1};
    CHECK(max_abs(sx * sy - sy * sx - i * sz) < 1e-12);
    CHECK(max_abs(sy * sz - sz * sy - i * sx) < 1e-12);
    CHECK(max_abs(sz * sx - sx * sz - i * sy) < 1e-12);
}

TEST_CASE("su(3) generator octet") {
    ObservableSet set = gell_mann_set();
    REQUIRE(set.size() == 8);
    for (const auto& o : set.observables()) {
        CHECK(std::abs(o.matrix.trace()) < 1e-12);
        CHECK(max_abs(o.matrix - o.matrix.adjoint()) < 1e-12);
    }
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            Complex hs = (set.observables()[a].matrix * set.observables()[b].matrix).trace();
            CHECK(std::abs(hs - (a == b ? Complex(2.0) : Complex(0.0))) < 1e-12);
        }
    check_casimir(set, 16.0 / 3.0);
}

TEST_CASE("two-level pair operators inside three-level atoms") {
    ObservableSet p12 = two_level_pair_set(1, 2);
    REQUIRE(p12.size() == 6);
    // sigma_z on levels {1,2} of atom 0: diagonal (-1, 1, 0), identity elsewhere
    const Operator& sz = p12.observables()[2].matrix;
    Operator local = Operator::Zero(3, 3);
    local(0, 0) = -1.0;
    local(1, 1) = 1.0;
    CHECK(max_abs(sz - lift_local(local, 0, p12.shape())) < 1e-15);

    ObservableSet p13 = two_level_pair_set(1, 3);
    const Operator& sx13 = p13.observables()[0].matrix;
    Operator local13 = Operator::Zero(3, 3);
    local13(2, 0) = 1.0;
    local13(0, 2) = 1.0;
    CHECK(max_abs(sx13 - lift_local(local13, 0, p13.shape())) < 1e-15);

    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            Complex hs = (p13.observables()[a].matrix * p13.observables()[b].matrix).trace();
            CHECK(std::abs(hs) < 1e-12);
        }
    CHECK(p13.casimir_kind() == CasimirKind::effective);
    CHECK(*p13.casimir_scalar() == doctest::Approx(6.0));

    CHECK_THROWS_AS(two_level_pair_set(1, 1), ValidationError);
    CHECK_THROWS_AS(two_level_pair_set(0, 4), ValidationError);
}

TEST_CASE("custom sets validate and certify their Casimir") {
    HilbertShape qubit({2});
    ObservableSet same_as_pauli = custom_set({pauli_x(), pauli_y(), pauli_z()}, qubit);
    check_casimir(same_as_pauli, 3.0);

    CHECK_THROWS_AS(custom_set({pauli_x(), pauli_x()}, qubit), ValidationError);

    const double r = 1.0 / std::sqrt(2.0);
    ObservableSet remixed = custom_set(
        {r * (pauli_x() + pauli_y()), r * (pauli_x() - pauli_y()), pauli_z()}, qubit);
    check_casimir(remixed, 3.0);

    Operator not_hermitian(2, 2);
    not_hermitian << 0, 1, 0, 0;
    CHECK_THROWS_AS(custom_set({not_hermitian}, qubit), ValidationError);
}

TEST_CASE("builtin generators are traceless and Hermitian") {
    for (const ObservableSet& set : {pauli_set(2), spin1_set(), gell_mann_set()}) {
        for (const auto& o : set.observables()) {
            CHECK(std::abs(o.matrix.trace()) < 1e-12);
            CHECK(max_abs(o.matrix - o.matrix.adjoint()) < 1e-12);
        }
    }
}

TEST_CASE("Casimir is invariant under orthogonal remixes of the basis") {
    Rng rng = derived_rng(505, 0);
    for (const ObservableSet& set : {spin1_set(), gell_mann_set(), pauli_set(2)}) {
        const int n = set.size();
        Eigen::MatrixXd mix = random_special_orthogonal(n, rng);
        std::vector<Operator> remixed;
        for (int i = 0; i < n; ++i) {
            Operator x = Operator::Zero(set.shape().total_dim(), set.shape().total_dim());
            for (int j = 0; j < n; ++j) x += mix(i, j) * set.observables()[j].matrix;
            remixed.push_back(std::move(x));
        }
        ObservableSet remixed_set = custom_set(remixed, set.shape());
        REQUIRE(remixed_set.casimir_scalar().has_value());
        CHECK(*remixed_set.casimir_scalar() ==
              doctest::Approx(*set.casimir_scalar()).epsilon(1e-9));
        CHECK(max_abs(sum_squares(remixed_set) - sum_squares(set)) < 1e-9);
    }
}

TEST_CASE("set ids resolve") {
    CHECK(set_from_name("pauli:3").size() == 9);
    CHECK(set_from_name("spin1").size() == 3);
    CHECK(set_from_name("su3").size() == 8);
    CHECK(set_from_name("pair:13").size() == 6);
    CHECK_THROWS_AS(set_from_name("pair:x"), ValidationError);
    CHECK_THROWS_AS(set_from_name("nope"), ValidationError);
}

} // TEST_SUITE
