#include "smi/config.hpp"

#include <fstream>
#include <numeric>

namespace smi {

namespace {

std::int64_t parse_fraction_point(const std::string& s, std::int64_t N) {
    // "p/q" (or a plain integer string) on the torus, reduced to N*p/q mod N.
    std::int64_t p = 0, q = 1;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            p = std::stoll(s);
        } else {
            p = std::stoll(s.substr(0, slash));
            q = std::stoll(s.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw Error("config: cannot parse rational point '" + s + "'");
    }
    if (q <= 0) {
        throw Error("config: rational point '" + s + "' has non-positive denominator");
    }
    if (N % q != 0) {
        throw Error("config: denominator of '" + s + "' does not divide the lattice lcm " +
                    std::to_string(N));
    }
    std::int64_t v = (N / q) * p % N;
    return v < 0 ? v + N : v;
}

Element parse_element(const json& j, const GroupSpec& g) {
    std::vector<std::int64_t> coords;
    if (j.is_number_integer()) {
        coords.push_back(j.get<std::int64_t>());
    } else if (j.is_string()) {
        if (g.rank() != 1) {
            throw Error("config: rational points require a cyclic (rank-1) group");
        }
        coords.push_back(parse_fraction_point(j.get<std::string>(), g.factors()[0]));
    } else if (j.is_array()) {
        for (const auto& c : j) {
            if (!c.is_number_integer()) {
                throw Error("config: element coordinates must be integers");
            }
            coords.push_back(c.get<std::int64_t>());
        }
    } else {
        throw Error("config: cannot parse element " + j.dump());
    }
    if (coords.size() != g.rank()) {
        throw Error("config: element " + j.dump() + " has wrong rank for group " + g.describe());
    }
    return g.canonicalize(Element(std::move(coords)));
}

std::vector<Element> parse_element_list(const json& j, const GroupSpec& g, const char* what) {
    if (!j.is_array()) {
        throw Error(std::string("config: ") + what + " must be a list");
    }
    std::vector<Element> out;
    for (const auto& e : j) out.push_back(parse_element(e, g));
    return out;
}

cplx parse_complex(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return cplx(j[0].get<double>(), j[1].get<double>());
    }
    throw Error("config: complex values must be numbers or [re, im] pairs");
}

Vec parse_signal(const json& j, const GroupSpec& g) {
    if (!j.is_object() || !j.contains("type")) {
        throw Error("config: signal must be an object with a 'type'");
    }
    const std::string type = j.at("type").get<std::string>();
    Vec v = Vec::Zero(g.order());
    if (type == "delta") {
        v[g.index_of(parse_element(j.at("at"), g))] = 1.0;
    } else if (type == "indicator") {
        for (const auto& p : j.at("points")) {
            v[g.index_of(parse_element(p, g))] = 1.0;
        }
    } else if (type == "vector") {
        const auto& vals = j.at("values");
        if (!vals.is_array() || static_cast<std::int64_t>(vals.size()) != g.order()) {
            throw Error("config: vector signal needs exactly " + std::to_string(g.order()) +
                        " values");
        }
        for (std::int64_t i = 0; i < g.order(); ++i) {
            v[i] = parse_complex(vals[static_cast<std::size_t>(i)]);
        }
    } else {
        throw Error("config: unknown signal type '" + type + "'");
    }
    return v;
}

std::vector<std::int64_t> parse_index_list(const json& j, const GroupSpec& g, const char* what) {
    std::vector<std::int64_t> out;
    for (const auto& e : parse_element_list(j, g, what)) {
        out.push_back(g.index_of(e));
    }
    return out;
}

json element_to_json(const GroupSpec& g, const Element& e) {
    json out = json::array();
    for (auto c : e.coords) out.push_back(c);
    return out;
}

json indices_to_json(const GroupSpec& g, const std::vector<std::int64_t>& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(element_to_json(g, g.element_at(i)));
    return out;
}

}  // namespace

const Vec* ProblemConfig::find_signal(const std::string& name) const {
    for (const auto& [n, v] : signals) {
        if (n == name) return &v;
    }
    return nullptr;
}

ProblemConfig parse_config(const json& j) {
    if (!j.is_object()) {
        throw Error("config: top level must be an object");
    }

    std::vector<std::int64_t> factors;
    std::vector<Element> default_f_gens, default_delta_gens;
    if (j.contains("torus")) {
        const auto& t = j.at("torus");
        const std::int64_t m = t.at("m").get<std::int64_t>();
        const std::int64_t n = t.at("n").get<std::int64_t>();
        if (m < 1 || n < 1) {
            throw Error("config: torus lattice parameters must be positive");
        }
        const std::int64_t N = std::lcm(m, n);
        factors = {N};
        // F = (1/m)Z_m and Delta = nZ, both reduced to Z_N.
        default_f_gens.push_back(Element({N / m}));
        default_delta_gens.push_back(Element({n % N}));
    } else if (j.contains("group")) {
        for (const auto& f : j.at("group")) {
            if (!f.is_number_integer()) {
                throw Error("config: group factors must be integers");
            }
            factors.push_back(f.get<std::int64_t>());
        }
    } else {
        throw Error("config: missing 'group' or 'torus'");
    }

    ProblemConfig cfg;
    cfg.group = GroupSpec(factors);

    if (!j.contains("torus")) {
        if (!j.contains("F_generators")) throw Error("config: missing F_generators");
        if (!j.contains("Delta_generators")) throw Error("config: missing Delta_generators");
    }
    cfg.F_generators = j.contains("F_generators")
                           ? parse_element_list(j.at("F_generators"), cfg.group, "F_generators")
                           : default_f_gens;
    cfg.Delta_generators =
        j.contains("Delta_generators")
            ? parse_element_list(j.at("Delta_generators"), cfg.group, "Delta_generators")
            : default_delta_gens;

    if (j.contains("signals")) {
        if (!j.at("signals").is_object()) {
            throw Error("config: 'signals' must be an object");
        }
        for (const auto& [name, sj] : j.at("signals").items()) {
            cfg.signals.emplace_back(name, parse_signal(sj, cfg.group));
        }
    }

    if (j.contains("generators")) {
        for (const auto& n : j.at("generators")) {
            const std::string name = n.get<std::string>();
            if (!cfg.find_signal(name)) {
                throw Error("config: generator '" + name + "' is not a defined signal");
            }
            cfg.generator_names.push_back(name);
        }
    } else if (!cfg.signals.empty()) {
        cfg.generator_names.push_back(cfg.signals.front().first);
    }

    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (t.contains("tau")) cfg.tau = t.at("tau").get<double>();
        if (t.contains("epsilon")) cfg.epsilon = t.at("epsilon").get<double>();
        if (cfg.tau <= 0 || cfg.epsilon <= 0) {
            throw Error("config: tolerances must be positive");
        }
    }

    if (j.contains("sections")) {
        const auto& s = j.at("sections");
        if (s.contains("F_mod_E")) {
            cfg.sections.f_mod_e = parse_index_list(s.at("F_mod_E"), cfg.group, "F_mod_E");
        }
        if (s.contains("G_mod_FplusDstar")) {
            cfg.sections.g_mod_fplusdstar =
                parse_index_list(s.at("G_mod_FplusDstar"), cfg.group, "G_mod_FplusDstar");
        }
        if (s.contains("Gamma_mod_Estar")) {
            cfg.sections.gamma_mod_estar =
                parse_index_list(s.at("Gamma_mod_Estar"), cfg.group, "Gamma_mod_Estar");
        }
        if (s.contains("Estar_mod_Delta")) {
            cfg.sections.estar_mod_delta =
                parse_index_list(s.at("Estar_mod_Delta"), cfg.group, "Estar_mod_Delta");
        }
    }

    // Normalized echo: explicit group, coordinate-tuple elements, vector signals.
    json echo;
    echo["group"] = json(cfg.group.factors());
    echo["F_generators"] = json::array();
    for (const auto& e : cfg.F_generators) echo["F_generators"].push_back(element_to_json(cfg.group, e));
    echo["Delta_generators"] = json::array();
    for (const auto& e : cfg.Delta_generators) {
        echo["Delta_generators"].push_back(element_to_json(cfg.group, e));
    }
    echo["signals"] = json::object();
    for (const auto& [name, v] : cfg.signals) {
        json vals = json::array();
        for (std::int64_t i = 0; i < v.size(); ++i) {
            vals.push_back(json::array({v[i].real(), v[i].imag()}));
        }
        echo["signals"][name] = {{"type", "vector"}, {"values", vals}};
    }
    echo["generators"] = json(cfg.generator_names);
    echo["tolerances"] = {{"tau", cfg.tau}, {"epsilon", cfg.epsilon}};
    json sections = json::object();
    if (cfg.sections.f_mod_e) {
        sections["F_mod_E"] = indices_to_json(cfg.group, *cfg.sections.f_mod_e);
    }
    if (cfg.sections.g_mod_fplusdstar) {
        sections["G_mod_FplusDstar"] = indices_to_json(cfg.group, *cfg.sections.g_mod_fplusdstar);
    }
    if (cfg.sections.gamma_mod_estar) {
        sections["Gamma_mod_Estar"] = indices_to_json(cfg.group, *cfg.sections.gamma_mod_estar);
    }
    if (cfg.sections.estar_mod_delta) {
        sections["Estar_mod_Delta"] = indices_to_json(cfg.group, *cfg.sections.estar_mod_delta);
    }
    if (!sections.empty()) echo["sections"] = sections;
    cfg.echo = std::move(echo);

    return cfg;
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("config: cannot open '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("config: " + std::string(e.what()));
    }
    return parse_config(j);
}

const Signal* Scenario::find_signal(const std::string& name) const {
    for (const auto& [n, s] : signals) {
        if (n == name) return &s;
    }
    return nullptr;
}

Scenario build_scenario(ProblemConfig cfg) {
    const Subgroup F = subgroup_from_generators(cfg.group, cfg.F_generators);
    const Subgroup Delta = subgroup_from_generators(cfg.group, cfg.Delta_generators);
    SmiContext ctx = make_context(cfg.group, F, Delta, cfg.sections);

    std::vector<std::pair<std::string, Signal>> signals;
    for (const auto& [name, v] : cfg.signals) {
        signals.emplace_back(name, Signal{cfg.group, v, ctx.weights.w_G});
    }
    std::vector<Signal> generators;
    for (const auto& name : cfg.generator_names) {
        generators.push_back(Signal{cfg.group, *cfg.find_signal(name), ctx.weights.w_G});
    }
    return Scenario{std::move(cfg), std::move(ctx), std::move(signals), std::move(generators)};
}

json e60_config_json() {
    return json{
        {"torus", {{"m", 15}, {"n", 12}}},
        {"signals",
         {{"phi", {{"type", "delta"}, {"at", "0"}}},
          {"delta30", {{"type", "delta"}, {"at", "1/2"}}},
          {"delta12", {{"type", "delta"}, {"at", "3/15"}}}}},
        {"generators", json::array({"phi"})},
        {"sections",
         {{"F_mod_E", json::array({"0", "3/15", "6/15", "9/15", "12/15"})},
          {"G_mod_FplusDstar", json::array({"0"})}}}};
}

}  // namespace smi
