#include "smi/lattice.hpp"

#include <algorithm>
#include <deque>

namespace smi {

Subgroup::Subgroup(GroupSpec parent, std::vector<Element> generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
    mask_.assign(static_cast<std::size_t>(parent_.order()), 0);
    std::vector<std::int64_t> gen_idx;
    gen_idx.reserve(generators_.size());
    for (const auto& gen : generators_) {
        gen_idx.push_back(parent_.index_of(gen));
    }

    // BFS closure under addition (negation follows: finite order).
    std::deque<std::int64_t> queue;
    const std::int64_t zero = parent_.index_of(parent_.zero());
    mask_[static_cast<std::size_t>(zero)] = 1;
    queue.push_back(zero);
    while (!queue.empty()) {
        const std::int64_t cur = queue.front();
        queue.pop_front();
        for (auto gidx : gen_idx) {
            const std::int64_t next = parent_.add_idx(cur, gidx);
            if (!mask_[static_cast<std::size_t>(next)]) {
                mask_[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }
    for (std::int64_t i = 0; i < parent_.order(); ++i) {
        if (mask_[static_cast<std::size_t>(i)]) elements_.push_back(i);
    }
}

Subgroup Subgroup::from_elements(GroupSpec parent, std::vector<std::int64_t> element_indices) {
    std::sort(element_indices.begin(), element_indices.end());
    element_indices.erase(std::unique(element_indices.begin(), element_indices.end()),
                          element_indices.end());
    Subgroup s;
    s.parent_ = std::move(parent);
    s.elements_ = std::move(element_indices);
    s.mask_.assign(static_cast<std::size_t>(s.parent_.order()), 0);
    for (auto i : s.elements_) {
        if (i < 0 || i >= s.parent_.order()) {
            throw Error("subgroup element index out of range");
        }
        s.mask_[static_cast<std::size_t>(i)] = 1;
    }
    const std::int64_t zero = s.parent_.index_of(s.parent_.zero());
    if (!s.mask_[static_cast<std::size_t>(zero)]) {
        throw Error("subgroup element set does not contain 0");
    }
    for (auto a : s.elements_) {
        for (auto b : s.elements_) {
            if (!s.mask_[static_cast<std::size_t>(s.parent_.add_idx(a, b))]) {
                throw Error("subgroup element set is not closed under addition");
            }
        }
        s.generators_.push_back(s.parent_.element_at(a));
    }
    return s;
}

Subgroup Subgroup::trivial(const GroupSpec& parent) { return Subgroup(parent, {}); }

Subgroup Subgroup::whole(const GroupSpec& parent) {
    std::vector<std::int64_t> all(static_cast<std::size_t>(parent.order()));
    for (std::int64_t i = 0; i < parent.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return Subgroup::from_elements(parent, std::move(all));
}

std::vector<Element> Subgroup::elements() const {
    std::vector<Element> out;
    out.reserve(elements_.size());
    for (auto i : elements_) out.push_back(parent_.element_at(i));
    return out;
}

Subgroup subgroup_from_generators(const GroupSpec& g, const std::vector<Element>& gens) {
    for (const auto& e : gens) g.validate(e);
    return Subgroup(g, gens);
}

Subgroup annihilator(const Subgroup& K) {
    const GroupSpec& g = K.parent();
    std::vector<std::int64_t> members;
    for (std::int64_t gamma = 0; gamma < g.order(); ++gamma) {
        const Element ge = g.element_at(gamma);
        bool ann = true;
        for (const auto& gen : K.generators()) {
            if (!g.pairing_is_one(gen, ge)) {
                ann = false;
                break;
            }
        }
        if (ann) members.push_back(gamma);
    }
    return Subgroup::from_elements(g, std::move(members));
}

Subgroup intersect_subgroups(const Subgroup& A, const Subgroup& B) {
    if (A.parent() != B.parent()) {
        throw Error("intersect_subgroups: parent group mismatch");
    }
    std::vector<std::int64_t> members;
    for (auto i : A.element_indices()) {
        if (B.contains_idx(i)) members.push_back(i);
    }
    return Subgroup::from_elements(A.parent(), std::move(members));
}

Subgroup sum_subgroups(const Subgroup& A, const Subgroup& B) {
    if (A.parent() != B.parent()) {
        throw Error("sum_subgroups: parent group mismatch");
    }
    std::vector<Element> gens;
    for (const auto& e : A.generators()) gens.push_back(e);
    for (const auto& e : B.generators()) gens.push_back(e);
    return Subgroup(A.parent(), std::move(gens));
}

SectionSet::SectionSet(Subgroup ambient, Subgroup modulus, std::vector<std::int64_t> rep_indices)
    : ambient_(std::move(ambient)), modulus_(std::move(modulus)), reps_(std::move(rep_indices)) {
    if (ambient_.parent() != modulus_.parent()) {
        throw Error("section: ambient and modulus have different parent groups");
    }
    const GroupSpec& g = ambient_.parent();
    rep_pos_.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t p = 0; p < reps_.size(); ++p) {
        const std::int64_t r = reps_[p];
        if (!ambient_.contains_idx(r)) {
            throw Error("section: representative lies outside the ambient subgroup");
        }
        for (auto m : modulus_.element_indices()) {
            const std::int64_t x = g.add_idx(r, m);
            if (rep_pos_[static_cast<std::size_t>(x)] != -1) {
                throw Error("section: coset hit more than once");
            }
            rep_pos_[static_cast<std::size_t>(x)] = static_cast<std::int64_t>(p);
        }
    }
    for (auto x : ambient_.element_indices()) {
        if (rep_pos_[static_cast<std::size_t>(x)] == -1) {
            throw Error("section: coset not covered");
        }
    }
    if (static_cast<std::int64_t>(reps_.size()) * modulus_.order() != ambient_.order()) {
        throw Error("section: size mismatch");
    }
}

std::vector<Element> SectionSet::rep_elements() const {
    std::vector<Element> out;
    out.reserve(reps_.size());
    for (auto i : reps_) out.push_back(parent().element_at(i));
    return out;
}

std::int64_t SectionSet::rep_position_of_idx(std::int64_t x) const {
    const std::int64_t p = rep_pos_[static_cast<std::size_t>(x)];
    if (p < 0) {
        throw Error("section lookup: element outside the ambient subgroup");
    }
    return p;
}

bool SectionSet::verify_transversal() const {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(parent().order()), 0);
    for (auto r : reps_) {
        for (auto m : modulus_.element_indices()) {
            auto& s = seen[static_cast<std::size_t>(parent().add_idx(r, m))];
            if (s) return false;
            s = 1;
        }
    }
    for (auto x : ambient_.element_indices()) {
        if (!seen[static_cast<std::size_t>(x)]) return false;
    }
    return true;
}

SectionSet quotient_section(const Subgroup& ambient, const Subgroup& K) {
    const GroupSpec& g = ambient.parent();
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::int64_t> reps;
    // Ambient indices are sorted, so the first unseen element of each coset is
    // the lexicographically smallest representative.
    for (auto x : ambient.element_indices()) {
        if (covered[static_cast<std::size_t>(x)]) continue;
        reps.push_back(x);
        for (auto m : K.element_indices()) {
            covered[static_cast<std::size_t>(g.add_idx(x, m))] = 1;
        }
    }
    return SectionSet(ambient, K, std::move(reps));
}

SectionSet quotient_section(const GroupSpec& g, const Subgroup& K) {
    return quotient_section(Subgroup::whole(g), K);
}

SectionSet composed_section_dual(const SectionSet& sec_gamma_mod_estar,
                                 const SectionSet& sec_estar_mod_delta) {
    const GroupSpec& g = sec_gamma_mod_estar.parent();
    if (g != sec_estar_mod_delta.parent()) {
        throw Error("composed_section_dual: parent group mismatch");
    }
    std::vector<std::int64_t> reps;
    reps.reserve(static_cast<std::size_t>(sec_gamma_mod_estar.size() * sec_estar_mod_delta.size()));
    for (auto e : sec_estar_mod_delta.reps()) {
        for (auto xi : sec_gamma_mod_estar.reps()) {
            reps.push_back(g.add_idx(xi, e));
        }
    }
    // SectionSet construction re-verifies the exactly-once cover.
    return SectionSet(sec_gamma_mod_estar.ambient(), sec_estar_mod_delta.modulus(),
                      std::move(reps));
}

SectionSet composed_section_primal(const SectionSet& sec_g_mod_fplusdstar,
                                   const SectionSet& sec_f_mod_e,
                                   const Subgroup& delta_star) {
    const GroupSpec& g = sec_g_mod_fplusdstar.parent();
    if (g != sec_f_mod_e.parent() || g != delta_star.parent()) {
        throw Error("composed_section_primal: parent group mismatch");
    }
    // Pi_{F/E} must simultaneously be a transversal of (F+Delta*)/Delta*.
    {
        const Subgroup& fplus = sec_g_mod_fplusdstar.modulus();
        std::vector<std::int64_t> ds = sec_f_mod_e.reps();
        SectionSet check(fplus, delta_star, std::move(ds));  // throws if not
    }
    std::vector<std::int64_t> reps;
    reps.reserve(static_cast<std::size_t>(sec_g_mod_fplusdstar.size() * sec_f_mod_e.size()));
    for (auto d : sec_f_mod_e.reps()) {
        for (auto x : sec_g_mod_fplusdstar.reps()) {
            reps.push_back(g.sub_idx(x, d));
        }
    }
    return SectionSet(sec_g_mod_fplusdstar.ambient(), delta_star, std::move(reps));
}

StandingReport standing_report(const GroupSpec& g, const Subgroup& F, const Subgroup& Delta) {
    if (F.parent() != g || Delta.parent() != g) {
        throw Error("standing_report: lattice parent mismatch");
    }
    StandingReport r{F,
                     Delta,
                     annihilator(Delta),
                     Subgroup::trivial(g),
                     Subgroup::trivial(g),
                     Subgroup::trivial(g),
                     {},
                     false};
    r.E = intersect_subgroups(F, r.Delta_star);
    r.E_star = annihilator(r.E);
    r.F_plus_Delta_star = sum_subgroups(F, r.Delta_star);

    r.quotient_sizes["G/Delta*"] = g.order() / r.Delta_star.order();
    r.quotient_sizes["Gamma/E*"] = g.order() / r.E_star.order();
    r.quotient_sizes["E*/Delta"] = r.E_star.order() / Delta.order();
    r.quotient_sizes["F/E"] = F.order() / r.E.order();
    r.quotient_sizes["G/(F+Delta*)"] = g.order() / r.F_plus_Delta_star.order();
    r.quotient_sizes["Gamma/Delta"] = g.order() / Delta.order();

    bool ok = true;
    // Delta is contained in E*.
    for (auto d : Delta.element_indices()) {
        if (!r.E_star.contains_idx(d)) ok = false;
    }
    // |K| * |K*| = |G| for each configured lattice.
    ok = ok && F.order() * annihilator(F).order() == g.order();
    ok = ok && Delta.order() * r.Delta_star.order() == g.order();
    ok = ok && r.E.order() * r.E_star.order() == g.order();
    // |E*/Delta| = |Delta*/E|.
    ok = ok && r.quotient_sizes["E*/Delta"] == r.Delta_star.order() / r.E.order();
    r.ok = ok;
    return r;
}

}  // namespace smi
