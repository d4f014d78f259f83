#pragma once

#include <vector>

#include "smi/lattice.hpp"
#include "smi/transform.hpp"

namespace smi {

/// Result of a full-invariance support test: the support set (in G or Gamma),
/// the lattice it must be invariant under, and whether the generated space
/// really equals the support-constrained subspace.
struct SupportCharacterization {
    bool invariant = false;
    std::vector<std::int64_t> support;  // sorted element indices
    Subgroup translation_modulus;
    std::int64_t orbit_rank = 0;
};

constexpr double kSupportThreshold = 1e-10;  // relative to max |value|

/// Support of a signal at finite precision.
std::vector<std::int64_t> signal_support(const Signal& f, double rel_threshold = kSupportThreshold);

/// Characterizes S_{(G,Lambda)}(A) as {f : supp f_hat in B} with
/// B = union of (supp phi_hat + lambda). Verifies Lambda-invariance of B
/// exactly and space equality by dimension count.
SupportCharacterization full_translation_support(const std::vector<Signal>& A,
                                                 const Subgroup& Lambda);

/// Mirror statement on the time side: S_{(T,Gamma)}(A) as {f : supp f in A_set}.
SupportCharacterization full_modulation_support(const std::vector<Signal>& A, const Subgroup& T);

/// S_{(G,Gamma)}(A) = L^2(G) iff some generator is nonzero; cross-checked by
/// the rank of the full modulated-translate orbit.
bool is_whole_space(const std::vector<Signal>& A, const GroupSpec& g);

}  // namespace smi
