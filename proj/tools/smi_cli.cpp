#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "smi/config.hpp"
#include "smi/range_function.hpp"
#include "smi/wiener.hpp"

namespace {

using namespace smi;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNonMember = 3;
constexpr int kExitPaperMismatch = 4;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

std::string fmt(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

std::string fmt_element(const GroupSpec& g, std::int64_t idx) {
    const Element e = g.element_at(idx);
    if (e.coords.size() == 1) return std::to_string(e.coords[0]);
    std::string s = "(";
    for (std::size_t j = 0; j < e.coords.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(e.coords[j]);
    }
    return s + ")";
}

std::string fmt_indices(const GroupSpec& g, const std::vector<std::int64_t>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ", ";
        s += fmt_element(g, idx[i]);
    }
    return s + "}";
}

json indices_json(const GroupSpec& g, const std::vector<std::int64_t>& idx) {
    json out = json::array();
    for (auto i : idx) {
        json e = json::array();
        for (auto c : g.element_at(i).coords) e.push_back(c);
        out.push_back(e);
    }
    return out;
}

struct CommonOpts {
    std::string config_path;
    std::string probe;
    std::optional<double> epsilon;
    std::optional<double> tau;
    std::string out_path;
    std::string csv_path;
};

void write_report(const json& report, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write report to '" + path + "'");
    out << report.dump(2) << "\n";
}

void write_dimension_csv(const Scenario& sc, const RangeFunctionTable& J,
                         const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write CSV to '" + path + "'");
    out << "x,xi,rank\n";
    for (std::int64_t ix = 0; ix < J.n_x; ++ix) {
        for (std::int64_t ixi = 0; ixi < J.n_xi; ++ixi) {
            out << fmt_element(sc.ctx.group, sc.ctx.sec_g_mod_dstar.reps()[ix]) << ","
                << fmt_element(sc.ctx.group, sc.ctx.sec_gamma_mod_estar.reps()[ixi]) << ","
                << J.ranks[static_cast<std::size_t>(J.cell(ix, ixi))] << "\n";
        }
    }
}

Scenario load_scenario(const CommonOpts& opts) {
    ProblemConfig cfg = load_config(opts.config_path);
    if (opts.epsilon) cfg.epsilon = *opts.epsilon;
    if (opts.tau) cfg.tau = *opts.tau;
    return build_scenario(std::move(cfg));
}

const Signal& resolve_probe(const Scenario& sc, const std::string& name) {
    if (name.empty()) throw Error("this command requires --probe NAME");
    const Signal* s = sc.find_signal(name);
    if (!s) throw Error("probe '" + name + "' is not a defined signal");
    return *s;
}

json standing_json(const Scenario& sc) {
    const auto& g = sc.ctx.group;
    const auto& st = sc.ctx.standing;
    json j;
    j["group"] = json(g.factors());
    j["order"] = g.order();
    j["F"] = indices_json(g, st.F.element_indices());
    j["Delta"] = indices_json(g, st.Delta.element_indices());
    j["Delta_star"] = indices_json(g, st.Delta_star.element_indices());
    j["E"] = indices_json(g, st.E.element_indices());
    j["E_star_order"] = st.E_star.order();
    j["quotient_sizes"] = json(st.quotient_sizes);
    j["ok"] = st.ok;
    j["sections"] = {
        {"G_mod_Dstar", indices_json(g, sc.ctx.sec_g_mod_dstar.reps())},
        {"Gamma_mod_Estar", indices_json(g, sc.ctx.sec_gamma_mod_estar.reps())},
        {"Estar_mod_Delta", indices_json(g, sc.ctx.sec_estar_mod_delta.reps())},
        {"F_mod_E", indices_json(g, sc.ctx.sec_f_mod_e.reps())},
        {"G_mod_FplusDstar", indices_json(g, sc.ctx.sec_g_mod_fplusdstar.reps())},
        {"Gamma_mod_Delta", indices_json(g, sc.ctx.sec_gamma_mod_delta.reps())},
    };
    return j;
}

void print_standing(const Scenario& sc) {
    const auto& g = sc.ctx.group;
    const auto& st = sc.ctx.standing;
    std::cout << "group        : " << g.describe() << " (order " << g.order() << ")\n";
    std::cout << "F            : order " << st.F.order() << " "
              << fmt_indices(g, st.F.element_indices()) << "\n";
    std::cout << "Delta        : order " << st.Delta.order() << " "
              << fmt_indices(g, st.Delta.element_indices()) << "\n";
    std::cout << "Delta*       : order " << st.Delta_star.order() << " "
              << fmt_indices(g, st.Delta_star.element_indices()) << "\n";
    std::cout << "E = F^Delta* : order " << st.E.order() << " "
              << fmt_indices(g, st.E.element_indices()) << "\n";
    std::cout << "E*           : order " << st.E_star.order() << "\n";
    for (const auto& [name, size] : st.quotient_sizes) {
        std::cout << "|" << name << "| = " << size << "\n";
    }
    std::cout << "Pi_{G/Delta*}      : " << fmt_indices(g, sc.ctx.sec_g_mod_dstar.reps()) << "\n";
    std::cout << "Pi_{Gamma/E*}      : " << fmt_indices(g, sc.ctx.sec_gamma_mod_estar.reps())
              << "\n";
    std::cout << "Pi_{E*/Delta}      : " << fmt_indices(g, sc.ctx.sec_estar_mod_delta.reps())
              << "\n";
    std::cout << "Pi_{F/E}           : " << fmt_indices(g, sc.ctx.sec_f_mod_e.reps()) << "\n";
    std::cout << "Pi_{G/(F+Delta*)}  : " << fmt_indices(g, sc.ctx.sec_g_mod_fplusdstar.reps())
              << "\n";
    std::cout << "standing ok  : " << (st.ok ? "yes" : "no") << "\n";
}

int cmd_validate(const CommonOpts& opts) {
    Scenario sc = load_scenario(opts);
    print_standing(sc);
    json report;
    report["command"] = "validate";
    report["config"] = sc.config.echo;
    report["standing"] = standing_json(sc);
    write_report(report, opts.out_path);
    return kExitOk;
}

int cmd_zak(const CommonOpts& opts) {
    Scenario sc = load_scenario(opts);
    const Signal& f = resolve_probe(sc, opts.probe);
    const ZakTable zak(f, sc.ctx.standing.Delta_star);
    const auto& g = sc.ctx.group;
    std::cout << "Zak table of '" << opts.probe << "' on Pi_{G/Delta*} x Pi_{Gamma/Delta}\n";
    json table = json::array();
    for (auto x : sc.ctx.sec_g_mod_dstar.reps()) {
        for (auto omega : sc.ctx.sec_gamma_mod_delta.reps()) {
            const cplx z = zak.at(x, omega);
            std::cout << "Z(" << fmt_element(g, x) << ", " << fmt_element(g, omega)
                      << ") = " << fmt(z) << "\n";
            table.push_back({{"x", fmt_element(g, x)},
                             {"xi", fmt_element(g, omega)},
                             {"re", z.real()},
                             {"im", z.imag()}});
        }
    }
    json report;
    report["command"] = "zak";
    report["config"] = sc.config.echo;
    report["probe"] = opts.probe;
    report["table"] = table;
    write_report(report, opts.out_path);
    return kExitOk;
}

int cmd_fiberize(const CommonOpts& opts) {
    Scenario sc = load_scenario(opts);
    const Signal& f = resolve_probe(sc, opts.probe);
    const FiberField field = fiberize(f, sc.ctx);
    const auto& g = sc.ctx.group;
    std::cout << "fibers of '" << opts.probe << "' (|f| = " << fmt(f.norm())
              << ", |Tf| = " << fmt(field.norm()) << ")\n";
    json cells = json::array();
    for (std::int64_t ix = 0; ix < sc.ctx.n_x(); ++ix) {
        for (std::int64_t ixi = 0; ixi < sc.ctx.n_xi(); ++ixi) {
            const Vec fiber = field.fibers.col(sc.ctx.cell(ix, ixi));
            std::cout << "T f(" << fmt_element(g, sc.ctx.sec_g_mod_dstar.reps()[ix]) << ", "
                      << fmt_element(g, sc.ctx.sec_gamma_mod_estar.reps()[ixi]) << ") = [";
            json jf = json::array();
            for (std::int64_t e = 0; e < fiber.size(); ++e) {
                if (e) std::cout << ", ";
                std::cout << fmt(fiber[e]);
                jf.push_back({fiber[e].real(), fiber[e].imag()});
            }
            std::cout << "]\n";
            cells.push_back({{"x", fmt_element(g, sc.ctx.sec_g_mod_dstar.reps()[ix])},
                             {"xi", fmt_element(g, sc.ctx.sec_gamma_mod_estar.reps()[ixi])},
                             {"fiber", jf}});
        }
    }
    json report;
    report["command"] = "fiberize";
    report["config"] = sc.config.echo;
    report["probe"] = opts.probe;
    report["norm"] = f.norm();
    report["field_norm"] = field.norm();
    report["cells"] = cells;
    write_report(report, opts.out_path);
    return kExitOk;
}

RangeFunctionTable build_table(const Scenario& sc) {
    if (sc.generators.empty()) {
        throw Error("no generators configured (add 'signals' and 'generators' to the config)");
    }
    return build_range_function(sc.generators, sc.ctx, sc.config.tau);
}

int cmd_rank(const CommonOpts& opts) {
    Scenario sc = load_scenario(opts);
    const RangeFunctionTable J = build_table(sc);
    const auto& g = sc.ctx.group;
    std::cout << "rank map (tau = " << fmt(sc.config.tau) << ")\n";
    for (std::int64_t ix = 0; ix < J.n_x; ++ix) {
        std::cout << "x=" << fmt_element(g, sc.ctx.sec_g_mod_dstar.reps()[ix]) << " :";
        for (std::int64_t ixi = 0; ixi < J.n_xi; ++ixi) {
            std::cout << " " << J.ranks[static_cast<std::size_t>(J.cell(ix, ixi))];
        }
        std::cout << "\n";
    }
    const PeriodicityReport per = periodicity_check(J, sc.ctx);
    std::cout << "periodicity max principal angle = " << fmt(per.max_principal_angle) << "\n";
    json report;
    report["command"] = "rank";
    report["config"] = sc.config.echo;
    report["ranks"] = json(dimension_map(J));
    report["periodicity_max_angle"] = per.max_principal_angle;
    write_report(report, opts.out_path);
    write_dimension_csv(sc, J, opts.csv_path);
    return kExitOk;
}

int cmd_member(const CommonOpts& opts, bool oracle) {
    Scenario sc = load_scenario(opts);
    const Signal& f = resolve_probe(sc, opts.probe);
    MembershipVerdict v;
    if (oracle) {
        v = brute_force_membership(f, sc.generators, sc.ctx, sc.config.epsilon);
    } else {
        const RangeFunctionTable J = build_table(sc);
        v = membership(f, J, sc.ctx, sc.config.epsilon);
    }
    const auto& g = sc.ctx.group;
    std::cout << "probe '" << opts.probe << "' is " << (v.is_member ? "a MEMBER" : "NOT a member")
              << " (max residual " << fmt(v.max_residual) << ", epsilon "
              << fmt(sc.config.epsilon) << ")\n";
    if (!oracle && !v.is_member) {
        std::cout << "worst cell: (" << fmt_element(g, v.worst_cell_x) << ", "
                  << fmt_element(g, v.worst_cell_xi) << ")\n";
    }
    json report;
    report["command"] = oracle ? "member-oracle" : "member";
    report["config"] = sc.config.echo;
    report["probe"] = opts.probe;
    report["is_member"] = v.is_member;
    report["max_residual"] = v.max_residual;
    report["global_residual"] = v.global_residual;
    write_report(report, opts.out_path);
    return v.is_member ? kExitOk : kExitNonMember;
}

int cmd_project(const CommonOpts& opts) {
    Scenario sc = load_scenario(opts);
    const Signal& f = resolve_probe(sc, opts.probe);
    const RangeFunctionTable J = build_table(sc);
    const Signal p = project(f, J, sc.ctx);
    Signal diff = f;
    diff.values -= p.values;
    std::cout << "projection of '" << opts.probe << "': |f| = " << fmt(f.norm())
              << ", |Pf| = " << fmt(p.norm()) << ", |f - Pf| = " << fmt(diff.norm()) << "\n";
    json vals = json::array();
    for (std::int64_t i = 0; i < p.values.size(); ++i) {
        vals.push_back({p.values[i].real(), p.values[i].imag()});
    }
    json report;
    report["command"] = "project";
    report["config"] = sc.config.echo;
    report["probe"] = opts.probe;
    report["norm_f"] = f.norm();
    report["norm_Pf"] = p.norm();
    report["norm_residual"] = diff.norm();
    report["projected"] = vals;
    write_report(report, opts.out_path);
    return kExitOk;
}

int cmd_wiener(const CommonOpts& opts) {
    Scenario sc = load_scenario(opts);
    const auto& g = sc.ctx.group;
    if (sc.generators.empty()) {
        throw Error("wiener: no generators configured");
    }
    const bool f_full = sc.ctx.standing.F.order() == g.order();
    const bool delta_full = sc.ctx.standing.Delta.order() == g.order();
    json report;
    report["command"] = "wiener";
    report["config"] = sc.config.echo;
    if (f_full && delta_full) {
        const bool whole = is_whole_space(sc.generators, g);
        std::cout << "(G,Gamma)-invariant space is " << (whole ? "all of L^2(G)" : "{0}") << "\n";
        report["whole_space"] = whole;
    } else if (f_full) {
        const auto c = full_translation_support(sc.generators, sc.ctx.standing.Delta);
        std::cout << "(G,Delta)-invariant: spectral support B = " << fmt_indices(g, c.support)
                  << "\n"
                  << "characterization holds: " << (c.invariant ? "yes" : "no")
                  << " (orbit rank " << c.orbit_rank << ")\n";
        report["support"] = indices_json(g, c.support);
        report["invariant"] = c.invariant;
        report["orbit_rank"] = c.orbit_rank;
    } else if (delta_full) {
        const auto c = full_modulation_support(sc.generators, sc.ctx.standing.F);
        std::cout << "(F,Gamma)-invariant: time support A = " << fmt_indices(g, c.support) << "\n"
                  << "characterization holds: " << (c.invariant ? "yes" : "no")
                  << " (orbit rank " << c.orbit_rank << ")\n";
        report["support"] = indices_json(g, c.support);
        report["invariant"] = c.invariant;
        report["orbit_rank"] = c.orbit_rank;
    } else {
        std::cout << "wiener: neither F = G nor Delta = Gamma; the full-invariance "
                     "characterizations do not apply to this config\n";
        report["applicable"] = false;
    }
    write_report(report, opts.out_path);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// paper-example

struct Asserter {
    int failures = 0;
    void check(bool ok, const std::string& what, const std::string& detail = "") {
        if (ok) {
            std::cout << "[ok]   " << what << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << what;
            if (!detail.empty()) std::cout << " — " << detail;
            std::cout << "\n";
        }
    }
};

int cmd_paper_example(const CommonOpts& opts) {
    ProblemConfig cfg;
    bool custom = false;
    if (!opts.config_path.empty()) {
        cfg = load_config(opts.config_path);
        custom = true;
    } else {
        cfg = parse_config(e60_config_json());
    }
    if (opts.epsilon) cfg.epsilon = *opts.epsilon;
    if (opts.tau) cfg.tau = *opts.tau;
    Scenario sc = build_scenario(std::move(cfg));
    const auto& g = sc.ctx.group;
    const auto& st = sc.ctx.standing;
    print_standing(sc);

    const ProblemConfig reference = parse_config(e60_config_json());
    const bool matches_reference = sc.config.group == reference.group &&
                                   sc.config.F_generators == reference.F_generators &&
                                   sc.config.Delta_generators == reference.Delta_generators;
    if (custom && !matches_reference) {
        std::cout << "notice: config differs from the worked torus example; "
                     "example assertions skipped\n";
        return kExitOk;
    }

    Asserter a;
    auto idx1 = [&](std::int64_t v) { return g.index_of(Element({v})); };

    a.check(st.E == subgroup_from_generators(g, {Element({20})}), "E = <20>");
    a.check(st.E_star == subgroup_from_generators(g, {Element({3})}), "E* = <3>");
    a.check(st.quotient_sizes.at("E*/Delta") == 4, "|E*/Delta| = 4");
    a.check(st.quotient_sizes.at("F/E") == 5, "|F/E| = 5");
    a.check(sc.ctx.n_x() == 5, "five x-cells");
    a.check(sc.ctx.n_xi() == 3, "three xi-cells");
    a.check(sc.ctx.sec_estar_mod_delta.reps() == std::vector<std::int64_t>({0, 3, 6, 9}),
            "Pi_{E*/Delta} = {0,3,6,9}");
    a.check(sc.ctx.sec_g_mod_dstar.reps() ==
                std::vector<std::int64_t>({0, 48, 36, 24, 12}),
            "Pi_{G/Delta*} = {0,48,36,24,12}");

    const Signal& phi = *sc.find_signal("phi");

    // T(T_{4r} phi) is the (1,1,1,1) indicator of the x-cell at 4r.
    double worst = 0.0;
    for (std::int64_t shift : {0, 12, 24, 36, 48}) {
        const FiberField field = fiberize(translate(phi, Element({shift})), sc.ctx);
        for (std::int64_t ix = 0; ix < sc.ctx.n_x(); ++ix) {
            const bool hit = sc.ctx.sec_g_mod_dstar.reps()[ix] == idx1(shift);
            for (std::int64_t ixi = 0; ixi < sc.ctx.n_xi(); ++ixi) {
                const Vec fiber = field.fibers.col(sc.ctx.cell(ix, ixi));
                const Vec expected =
                    hit ? Vec(Vec::Ones(4)) : Vec(Vec::Zero(4));
                worst = std::max(worst, (fiber - expected).cwiseAbs().maxCoeff());
            }
        }
    }
    a.check(worst <= 1e-10, "fiber pattern of the translated generators", fmt(worst));

    const RangeFunctionTable J = build_range_function({phi}, sc.ctx, sc.config.tau);
    bool all_rank1 = true;
    double basis_err = 0.0;
    const Vec ref = Vec::Ones(4) / 2.0;
    for (const auto& B : J.bases) {
        if (B.cols() != 1) {
            all_rank1 = false;
            continue;
        }
        basis_err = std::max(basis_err, std::min((B.col(0) - ref).norm(), (B.col(0) + ref).norm()));
    }
    a.check(all_rank1, "every range cell has rank 1");
    a.check(basis_err <= 1e-10, "cell bases span (1,1,1,1)/2", fmt(basis_err));

    // Fiber of delta30 checked against an independent direct summation of the
    // defining series, not the value the example prints (see README).
    const Signal& d30 = *sc.find_signal("delta30");
    const FiberField f30 = fiberize(d30, sc.ctx);
    double d30_err = 0.0;
    for (std::int64_t ix = 0; ix < sc.ctx.n_x(); ++ix) {
        for (std::int64_t ixi = 0; ixi < sc.ctx.n_xi(); ++ixi) {
            for (std::int64_t ie = 0; ie < sc.ctx.fiber_dim(); ++ie) {
                const std::int64_t x = sc.ctx.sec_g_mod_dstar.reps()[ix];
                const std::int64_t omega = g.add_idx(sc.ctx.sec_gamma_mod_estar.reps()[ixi],
                                                     sc.ctx.sec_estar_mod_delta.reps()[ie]);
                cplx direct = 0.0;
                for (auto h : st.Delta_star.element_indices()) {
                    direct += d30.values[g.sub_idx(x, h)] * g.pairing_idx(h, omega);
                }
                d30_err = std::max(d30_err,
                                   std::abs(f30.fibers(ie, sc.ctx.cell(ix, ixi)) - direct));
            }
        }
    }
    a.check(d30_err <= 1e-10, "fiber of the half-shift against direct summation", fmt(d30_err));

    const MembershipVerdict v30 = membership(d30, J, sc.ctx, sc.config.epsilon);
    a.check(!v30.is_member, "half-shift of the generator is NOT a member",
            "residual " + fmt(v30.max_residual));
    const MembershipVerdict v30o =
        brute_force_membership(d30, {phi}, sc.ctx, sc.config.epsilon);
    a.check(!v30o.is_member, "oracle agrees: NOT a member");

    const Signal& d12 = *sc.find_signal("delta12");
    const MembershipVerdict v12 = membership(d12, J, sc.ctx, sc.config.epsilon);
    a.check(v12.is_member, "lattice shift of the generator IS a member",
            "residual " + fmt(v12.max_residual));

    json report;
    report["command"] = "paper-example";
    report["config"] = sc.config.echo;
    report["standing"] = standing_json(sc);
    report["failures"] = a.failures;
    write_report(report, opts.out_path);

    if (a.failures > 0) {
        std::cout << a.failures << " assertion(s) failed\n";
        return kExitPaperMismatch;
    }
    std::cout << "all example assertions passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shift-modulation invariant space analysis on finite abelian groups"};
    app.require_subcommand(1);

    CommonOpts opts;
    double eps_val = 0.0, tau_val = 0.0;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* c = cmd->add_option("--config", opts.config_path, "problem config (JSON)");
        if (needs_config) c->required();
        cmd->add_option("--probe", opts.probe, "signal name to analyze");
        cmd->add_option("--epsilon", eps_val, "membership threshold (relative)")
            ->each([&](const std::string&) { opts.epsilon = eps_val; });
        cmd->add_option("--tau", tau_val, "rank truncation threshold (relative)")
            ->each([&](const std::string&) { opts.tau = tau_val; });
        cmd->add_option("--out", opts.out_path, "write machine-readable report (JSON)");
        cmd->add_option("--csv", opts.csv_path, "write dimension map CSV");
    };

    auto* validate = app.add_subcommand("validate", "standing-assumptions report and sections");
    auto* zak = app.add_subcommand("zak", "Zak transform table of a probe signal");
    auto* fib = app.add_subcommand("fiberize", "fiber field of a probe signal");
    auto* rank = app.add_subcommand("rank", "range-function dimension map");
    auto* member = app.add_subcommand("member", "membership test for a probe signal");
    auto* member_oracle =
        app.add_subcommand("member-oracle", "brute-force membership test for a probe signal");
    auto* project = app.add_subcommand("project", "orthogonal projection of a probe signal");
    auto* wiener = app.add_subcommand("wiener", "full-invariance support characterizations");
    auto* paper = app.add_subcommand("paper-example", "reproduce the worked torus example");
    for (auto* c : {validate, zak, fib, rank, member, member_oracle, project, wiener}) {
        add_common(c, true);
    }
    add_common(paper, false);

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    int rc = kExitOk;
    try {
        if (validate->parsed()) rc = cmd_validate(opts);
        else if (zak->parsed()) rc = cmd_zak(opts);
        else if (fib->parsed()) rc = cmd_fiberize(opts);
        else if (rank->parsed()) rc = cmd_rank(opts);
        else if (member->parsed()) rc = cmd_member(opts, false);
        else if (member_oracle->parsed()) rc = cmd_member(opts, true);
        else if (project->parsed()) rc = cmd_project(opts);
        else if (wiener->parsed()) rc = cmd_wiener(opts);
        else if (paper->parsed()) rc = cmd_paper_example(opts);
    } catch (const smi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
    return rc;
}
