#include "smi/wiener.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <set>

namespace smi {

namespace {

std::int64_t matrix_rank(const Mat& M, double rel_threshold = 1e-9) {
    if (M.cols() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(M);
    const auto& sigma = svd.singularValues();
    const double smax = sigma.size() > 0 ? sigma[0] : 0.0;
    if (smax <= 0.0) return 0;
    std::int64_t rank = 0;
    for (std::int64_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] > rel_threshold * smax) ++rank;
    }
    return rank;
}

bool set_translation_invariant(const std::set<std::int64_t>& B, const Subgroup& K) {
    const GroupSpec& g = K.parent();
    for (const auto& gen : K.generators()) {
        const std::int64_t k = g.index_of(gen);
        for (auto b : B) {
            if (!B.count(g.add_idx(b, k))) return false;
        }
    }
    return true;
}

/// Rank of the span of {M_mu T_t phi : mu in mods, t in shifts, phi in A}.
std::int64_t orbit_rank(const std::vector<Signal>& A, const std::vector<std::int64_t>& shifts,
                        const std::vector<std::int64_t>& mods) {
    const GroupSpec& g = A.front().group;
    Mat M(g.order(),
          static_cast<std::int64_t>(A.size() * shifts.size() * mods.size()));
    std::int64_t col = 0;
    for (auto mu : mods) {
        const Element me = g.element_at(mu);
        for (auto t : shifts) {
            const Element te = g.element_at(t);
            for (const auto& phi : A) {
                M.col(col++) = modulate(translate(phi, te), me).values;
            }
        }
    }
    return matrix_rank(M);
}

std::vector<std::int64_t> all_indices(const GroupSpec& g) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(g.order()));
    for (std::int64_t i = 0; i < g.order(); ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

}  // namespace

std::vector<std::int64_t> signal_support(const Signal& f, double rel_threshold) {
    const double m = f.values.cwiseAbs().maxCoeff();
    std::vector<std::int64_t> supp;
    if (m <= 0.0) return supp;
    for (std::int64_t i = 0; i < f.values.size(); ++i) {
        if (std::abs(f.values[i]) > rel_threshold * m) supp.push_back(i);
    }
    return supp;
}

SupportCharacterization full_translation_support(const std::vector<Signal>& A,
                                                 const Subgroup& Lambda) {
    if (A.empty()) {
        throw Error("full_translation_support: empty generator set");
    }
    const GroupSpec& g = A.front().group;
    std::set<std::int64_t> B;
    for (const auto& phi : A) {
        const Signal phat = fourier(phi);
        for (auto s : signal_support(phat)) {
            for (auto lam : Lambda.element_indices()) {
                B.insert(g.add_idx(s, lam));
            }
        }
    }
    SupportCharacterization out{false, {B.begin(), B.end()}, Lambda, 0};
    out.orbit_rank = orbit_rank(A, all_indices(g), Lambda.element_indices());
    out.invariant = set_translation_invariant(B, Lambda) &&
                    out.orbit_rank == static_cast<std::int64_t>(B.size());
    return out;
}

SupportCharacterization full_modulation_support(const std::vector<Signal>& A, const Subgroup& T) {
    if (A.empty()) {
        throw Error("full_modulation_support: empty generator set");
    }
    const GroupSpec& g = A.front().group;
    std::set<std::int64_t> supp;
    for (const auto& phi : A) {
        for (auto s : signal_support(phi)) {
            for (auto t : T.element_indices()) {
                supp.insert(g.add_idx(s, t));
            }
        }
    }
    SupportCharacterization out{false, {supp.begin(), supp.end()}, T, 0};
    out.orbit_rank = orbit_rank(A, T.element_indices(), all_indices(g));
    out.invariant = set_translation_invariant(supp, T) &&
                    out.orbit_rank == static_cast<std::int64_t>(supp.size());
    return out;
}

bool is_whole_space(const std::vector<Signal>& A, const GroupSpec& g) {
    if (A.empty()) {
        throw Error("is_whole_space: empty generator set");
    }
    bool any_nonzero = false;
    for (const auto& phi : A) {
        if (phi.group != g) {
            throw Error("is_whole_space: generator group mismatch");
        }
        if (phi.values.cwiseAbs().maxCoeff() > 0.0) any_nonzero = true;
    }
    const std::int64_t rank = orbit_rank(A, all_indices(g), all_indices(g));
    if (any_nonzero != (rank == g.order())) {
        throw Error("is_whole_space: nonzero-generator test and orbit rank disagree");
    }
    return any_nonzero;
}

}  // namespace smi
