// fixtures.hpp
// Named reference states so the worked examples run without authoring files.

#pragma once

#include "qdsys/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdsys {

// Known names:
//   spin1:0    qutrit with zero spin projection
//   spin1:+    (|1> + |-1>)/sqrt2
//   spin1:-    (|1> - |-1>)/sqrt2
//   pion:0     alias of spin1:0 (neutral member of the isospin triplet)
//   biphoton:0 symmetric two-photon polarization state (|xy>+|yx>)/sqrt2
//   bell:phi+  (|00> + |11>)/sqrt2
//   ghz        (|000> + |111>)/sqrt2
//   w          (|001> + |010> + |100>)/sqrt3
std::optional<StateVector> fixture_state(const std::string& name);

std::vector<std::string> fixture_names();

} // namespace qdsys
