#pragma once

#include <optional>

#include "smi/group.hpp"
#include "smi/lattice.hpp"

namespace smi {

/// Everything the fiberization isometry and the range-function machinery need
/// for a configured pair (F, Delta): derived lattices, sections and weights.
/// Immutable once built; safe to share across threads.
struct SmiContext {
    GroupSpec group;
    StandingReport standing;
    HaarWeights weights;

    SectionSet sec_g_mod_fplusdstar;   // Pi_{G/(F+Delta*)}
    SectionSet sec_f_mod_e;            // Pi_{F/E}
    SectionSet sec_g_mod_dstar;        // Pi_{G/Delta*}, composed (d-major)
    SectionSet sec_gamma_mod_estar;    // Pi_{Gamma/E*}
    SectionSet sec_estar_mod_delta;    // Pi_{E*/Delta}
    SectionSet sec_gamma_mod_delta;    // Pi_{Gamma/Delta}, composed (e-major)

    std::int64_t n_x() const { return sec_g_mod_dstar.size(); }
    std::int64_t n_xi() const { return sec_gamma_mod_estar.size(); }
    std::int64_t fiber_dim() const { return sec_estar_mod_delta.size(); }
    std::int64_t n_cells() const { return n_x() * n_xi(); }
    std::int64_t cell(std::int64_t ix, std::int64_t ixi) const { return ix * n_xi() + ixi; }

    /// y = z + d with z in E and d in Pi_{F/E}; y must lie in F.
    struct Decomposition {
        std::int64_t z;  // element index, in E
        std::int64_t d;  // element index, in Pi_{F/E}
    };
    Decomposition decompose_in_f(std::int64_t y) const;
};

/// Optional user-supplied sections; canonical transversals are used where
/// absent. Pi_{F/E} reps must lie in F.
struct SectionOverrides {
    std::optional<std::vector<std::int64_t>> f_mod_e;
    std::optional<std::vector<std::int64_t>> g_mod_fplusdstar;
    std::optional<std::vector<std::int64_t>> gamma_mod_estar;
    std::optional<std::vector<std::int64_t>> estar_mod_delta;
};

SmiContext make_context(const GroupSpec& g, const Subgroup& F, const Subgroup& Delta,
                        const SectionOverrides& overrides = {});

}  // namespace smi
