#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smi/group.hpp"

namespace smi {

/// An enumerated subgroup of a GroupSpec. Elements are kept as sorted flat
/// indices (sorted index order == lexicographic coordinate order), together
/// with a membership mask over the parent group.
class Subgroup {
public:
    /// Closure of the given generators under the group operation.
    Subgroup(GroupSpec parent, std::vector<Element> generators);

    /// Subgroup from an explicit element set (validated for closure).
    static Subgroup from_elements(GroupSpec parent, std::vector<std::int64_t> element_indices);

    static Subgroup trivial(const GroupSpec& parent);
    static Subgroup whole(const GroupSpec& parent);

    const GroupSpec& parent() const { return parent_; }
    const std::vector<Element>& generators() const { return generators_; }
    const std::vector<std::int64_t>& element_indices() const { return elements_; }
    std::vector<Element> elements() const;
    std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }

    bool contains_idx(std::int64_t idx) const { return mask_[static_cast<std::size_t>(idx)] != 0; }
    bool contains(const Element& x) const { return contains_idx(parent_.index_of(x)); }

    bool operator==(const Subgroup& o) const {
        return parent_ == o.parent_ && elements_ == o.elements_;
    }

private:
    Subgroup() = default;

    GroupSpec parent_{std::vector<std::int64_t>{1}};
    std::vector<Element> generators_;
    std::vector<std::int64_t> elements_;  // sorted
    std::vector<std::uint8_t> mask_;      // size |parent|
};

Subgroup subgroup_from_generators(const GroupSpec& g, const std::vector<Element>& gens);

/// K* = {gamma : (k, gamma) = 1 for all k in K}, computed by exact integer
/// congruences against the generators of K. Lives in the dual presentation
/// (same tuple space).
Subgroup annihilator(const Subgroup& K);

Subgroup intersect_subgroups(const Subgroup& A, const Subgroup& B);
Subgroup sum_subgroups(const Subgroup& A, const Subgroup& B);

/// An ordered transversal of ambient/modulus: every element of the ambient
/// subgroup is rep + m for exactly one (rep, m) with m in modulus. The
/// ambient defaults to the whole parent group.
class SectionSet {
public:
    /// Builds from explicit reps; throws unless they tile the ambient exactly once.
    SectionSet(Subgroup ambient, Subgroup modulus, std::vector<std::int64_t> rep_indices);

    const GroupSpec& parent() const { return ambient_.parent(); }
    const Subgroup& ambient() const { return ambient_; }
    const Subgroup& modulus() const { return modulus_; }
    const std::vector<std::int64_t>& reps() const { return reps_; }
    std::vector<Element> rep_elements() const;
    std::int64_t size() const { return static_cast<std::int64_t>(reps_.size()); }

    /// Position in reps() of the representative of x's coset. x must lie in
    /// the ambient subgroup.
    std::int64_t rep_position_of_idx(std::int64_t x) const;
    std::int64_t rep_index_of_idx(std::int64_t x) const { return reps_[static_cast<std::size_t>(rep_position_of_idx(x))]; }

    /// Re-runs the exactly-once cover check.
    bool verify_transversal() const;

private:
    Subgroup ambient_;
    Subgroup modulus_;
    std::vector<std::int64_t> reps_;
    std::vector<std::int64_t> rep_pos_;  // parent-indexed; -1 outside ambient
};

/// Canonical transversal of g/K: lexicographically smallest representative of
/// each coset, ordered lexicographically.
SectionSet quotient_section(const GroupSpec& g, const Subgroup& K);

/// Canonical transversal of ambient/K inside a subgroup.
SectionSet quotient_section(const Subgroup& ambient, const Subgroup& K);

/// Pi_{Gamma/Delta} = union over e in Pi_{E*/Delta} of (Pi_{Gamma/E*} + e),
/// ordered e-major.
SectionSet composed_section_dual(const SectionSet& sec_gamma_mod_estar,
                                 const SectionSet& sec_estar_mod_delta);

/// Pi_{G/Delta*} = union over d in Pi_{F/E} of (Pi_{G/(F+Delta*)} - d),
/// ordered d-major. Pi_{F/E} is validated as a transversal of both F/E and
/// (F+Delta*)/Delta* before composing.
SectionSet composed_section_primal(const SectionSet& sec_g_mod_fplusdstar,
                                   const SectionSet& sec_f_mod_e,
                                   const Subgroup& delta_star);

/// Derived lattice data for a configured pair (F, Delta).
struct StandingReport {
    Subgroup F;
    Subgroup Delta;
    Subgroup Delta_star;
    Subgroup E;       // F intersect Delta*
    Subgroup E_star;
    Subgroup F_plus_Delta_star;
    std::map<std::string, std::int64_t> quotient_sizes;
    bool ok = false;
};

StandingReport standing_report(const GroupSpec& g, const Subgroup& F, const Subgroup& Delta);

}  // namespace smi
