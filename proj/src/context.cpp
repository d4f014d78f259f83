#include "smi/context.hpp"

namespace smi {

SmiContext::Decomposition SmiContext::decompose_in_f(std::int64_t y) const {
    if (!standing.F.contains_idx(y)) {
        throw Error("decompose_in_f: element is not in F");
    }
    const std::int64_t pos = sec_f_mod_e.rep_position_of_idx(y);
    const std::int64_t d = sec_f_mod_e.reps()[static_cast<std::size_t>(pos)];
    const std::int64_t z = group.sub_idx(y, d);
    return {z, d};
}

namespace {
SectionSet build_section(const Subgroup& ambient, const Subgroup& modulus,
                         const std::optional<std::vector<std::int64_t>>& override_reps) {
    if (override_reps) {
        return SectionSet(ambient, modulus, *override_reps);
    }
    return quotient_section(ambient, modulus);
}
}  // namespace

SmiContext make_context(const GroupSpec& g, const Subgroup& F, const Subgroup& Delta,
                        const SectionOverrides& overrides) {
    StandingReport standing = standing_report(g, F, Delta);
    const Subgroup whole = Subgroup::whole(g);

    SectionSet sec_g_mod_fplusdstar =
        build_section(whole, standing.F_plus_Delta_star, overrides.g_mod_fplusdstar);
    SectionSet sec_f_mod_e = build_section(standing.F, standing.E, overrides.f_mod_e);
    SectionSet sec_gamma_mod_estar = build_section(whole, standing.E_star, overrides.gamma_mod_estar);
    SectionSet sec_estar_mod_delta =
        build_section(standing.E_star, standing.Delta, overrides.estar_mod_delta);

    SectionSet sec_g_mod_dstar =
        composed_section_primal(sec_g_mod_fplusdstar, sec_f_mod_e, standing.Delta_star);
    SectionSet sec_gamma_mod_delta = composed_section_dual(sec_gamma_mod_estar, sec_estar_mod_delta);

    HaarWeights weights =
        HaarWeights::from_delta_star_order(g.order(), standing.Delta_star.order());

    return SmiContext{g,
                      std::move(standing),
                      weights,
                      std::move(sec_g_mod_fplusdstar),
                      std::move(sec_f_mod_e),
                      std::move(sec_g_mod_dstar),
                      std::move(sec_gamma_mod_estar),
                      std::move(sec_estar_mod_delta),
                      std::move(sec_gamma_mod_delta)};
}

}  // namespace smi
