#include "qdsys/state_io.hpp"

#include "qdsys/fixtures.hpp"

#include "support/test_helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace qdsys;

TEST_SUITE("state-io") {

TEST_CASE("round trip is bit exact") {
    Rng rng = derived_rng(314, 0);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector psi = haar_random_state(HilbertShape({2, 3, 2}), rng);
        std::stringstream buf;
        write_state(buf, psi, "roundtrip");
        StateVector back = read_state(buf);
        CHECK(back.shape() == psi.shape());
        for (int i = 0; i < psi.dim(); ++i) {
            CHECK(back.amp(i).real() == psi.amp(i).real());
            CHECK(back.amp(i).imag() == psi.amp(i).imag());
        }
    }
}

TEST_CASE("unnormalized states keep their flag") {
    Vector v = Vector::Zero(4);
    v(0) = 0.5;
    StateVector raw = StateVector::unnormalized(HilbertShape({2, 2}), v);
    std::stringstream buf;
    write_state(buf, raw);
    StateVector back = read_state(buf);
    CHECK(back.is_unnormalized());
    CHECK(back.amp(0) == Complex(0.5));
}

TEST_CASE("malformed content raises parse errors") {
    auto reject = [](const std::string& text) {
        std::stringstream buf(text);
        CHECK_THROWS_AS(read_state(buf), ParseError);
    };
    reject("not json at all");
    reject(R"({"format_version": 1, "dims": [2], "amplitudes": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]})");
    reject(R"({"format_version": 99, "dims": [2], "amplitudes": [[1.0, 0.0], [0.0, 0.0]]})");
    reject(R"({"format_version": 1, "dims": [2], "amplitudes": [1.0, 0.0]})");
    reject(R"({"format_version": 1, "dims": [2], "amplitudes": [[0.5, 0.0], [0.0, 0.0]]})");  // not normalized
    reject(R"({"dims": [2], "amplitudes": [[1.0, 0.0], [0.0, 0.0]]})");
}

TEST_CASE("state arguments resolve fixtures first") {
    StateVector ghz = load_state_arg("ghz");
    CHECK(ghz.dim() == 8);
    CHECK_THROWS_AS(load_state_arg("/does/not/exist.json"), ParseError);
    for (const auto& name : fixture_names()) CHECK(fixture_state(name).has_value());
    CHECK(!fixture_state("bogus").has_value());
}

} // TEST_SUITE
