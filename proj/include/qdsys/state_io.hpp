// state_io.hpp
// JSON state files: {"format_version": 1, "dims": [...], "amplitudes":
// [[re, im], ...], "label": "...", "unnormalized": bool}. Amplitudes follow
// the row-major, last-site-fastest index order. Doubles round-trip exactly.

#pragma once

#include "qdsys/core.hpp"

#include <iosfwd>
#include <string>

namespace qdsys {

// Malformed file content (JSON syntax, missing fields, wrong types).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kStateFormatVersion = 1;

StateVector read_state(std::istream& in);
StateVector read_state_file(const std::string& path);

void write_state(std::ostream& out, const StateVector& psi, const std::string& label = "");
void write_state_file(const std::string& path, const StateVector& psi,
                      const std::string& label = "");

// Fixture name if it matches, otherwise a file load.
StateVector load_state_arg(const std::string& name_or_path);

} // namespace qdsys
