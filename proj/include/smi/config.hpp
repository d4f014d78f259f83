#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "smi/context.hpp"
#include "smi/transform.hpp"

namespace smi {

using json = nlohmann::ordered_json;

/// A parsed and validated problem description. Torus-rational input (a
/// "torus" block with lattice moduli m and n, and fraction-valued points) is
/// reduced to Z_N with N = lcm of all lattice denominators at parse time.
struct ProblemConfig {
    GroupSpec group{std::vector<std::int64_t>{1}};
    std::vector<Element> F_generators;
    std::vector<Element> Delta_generators;
    std::vector<std::pair<std::string, Vec>> signals;  // name -> raw values
    std::vector<std::string> generator_names;          // names used as the set A
    double tau = 1e-9;
    double epsilon = 1e-8;
    SectionOverrides sections;
    json echo;  // normalized form; re-parses to an equivalent config

    const Vec* find_signal(const std::string& name) const;
};

ProblemConfig parse_config(const json& j);
ProblemConfig load_config(const std::string& path);

/// Context plus weighted signals, ready for analysis commands.
struct Scenario {
    ProblemConfig config;
    SmiContext ctx;
    std::vector<std::pair<std::string, Signal>> signals;
    std::vector<Signal> generators;

    const Signal* find_signal(const std::string& name) const;
};

Scenario build_scenario(ProblemConfig cfg);

/// The paper-example configuration: the torus with translation lattice of 15
/// points and modulation stride 12, reduced to Z_60, with the section choices
/// the worked example uses.
json e60_config_json();

}  // namespace smi
