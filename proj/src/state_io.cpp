#include "qdsys/state_io.hpp"

#include "qdsys/fixtures.hpp"

#include <json.hpp>

#include <fstream>

namespace qdsys {

using nlohmann::json;

StateVector read_state(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("state file: ") + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != kStateFormatVersion)
            throw ParseError("state file: unsupported format_version");
        std::vector<int> dims = j.at("dims").get<std::vector<int>>();
        const auto& amps = j.at("amplitudes");
        HilbertShape shape(dims);
        if (static_cast<int>(amps.size()) != shape.total_dim())
            throw ParseError("state file: amplitude count does not match dims");
        Vector v(shape.total_dim());
        for (int i = 0; i < shape.total_dim(); ++i) {
            const auto& pair = amps.at(static_cast<size_t>(i));
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("state file: amplitudes must be [re, im] pairs");
            v(i) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
        if (j.value("unnormalized", false))
            return StateVector::unnormalized(std::move(shape), std::move(v));
        return StateVector(std::move(shape), std::move(v));
    } catch (const json::exception& e) {
        throw ParseError(std::string("state file: ") + e.what());
    } catch (const ValidationError& e) {
        throw ParseError(std::string("state file: ") + e.what());
    }
}

StateVector read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file: " + path);
    return read_state(in);
}

void write_state(std::ostream& out, const StateVector& psi, const std::string& label) {
    json j;
    j["format_version"] = kStateFormatVersion;
    j["dims"] = psi.shape().dims();
    json amps = json::array();
    for (int i = 0; i < psi.dim(); ++i)
        amps.push_back({psi.amp(i).real(), psi.amp(i).imag()});
    j["amplitudes"] = std::move(amps);
    if (!label.empty()) j["label"] = label;
    if (psi.is_unnormalized()) j["unnormalized"] = true;
    out << j.dump(2) << "\n";
}

void write_state_file(const std::string& path, const StateVector& psi, const std::string& label) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open state file for writing: " + path);
    write_state(out, psi, label);
}

StateVector load_state_arg(const std::string& name_or_path) {
    if (auto fixture = fixture_state(name_or_path)) return *fixture;
    return read_state_file(name_or_path);
}

} // namespace qdsys
