#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace smi {

using cplx = std::complex<double>;

/// Error type for all contract violations in the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A point of a finite abelian group, as residues against the group's factors.
struct Element {
    std::vector<std::int64_t> coords;

    Element() = default;
    explicit Element(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    bool operator==(const Element& o) const { return coords == o.coords; }
};

/// A finite abelian group presented as a product of cyclic groups
/// Z_{n1} x ... x Z_{nk}. The dual group uses the same tuple space
/// (self-dual presentation), so Element also indexes characters.
///
/// Elements are identified with flat indices in [0, order) via the
/// lexicographic mixed-radix order of their coordinate tuples.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }

    bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

    /// Reduces arbitrary integer coordinates into canonical residues.
    Element canonicalize(const Element& x) const;
    void validate(const Element& x) const;

    std::int64_t index_of(const Element& x) const;
    Element element_at(std::int64_t idx) const;

    Element zero() const { return Element(std::vector<std::int64_t>(rank(), 0)); }
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;

    // Index-space versions of the group operation (used in hot loops).
    std::int64_t add_idx(std::int64_t a, std::int64_t b) const;
    std::int64_t neg_idx(std::int64_t a) const;
    std::int64_t sub_idx(std::int64_t a, std::int64_t b) const { return add_idx(a, neg_idx(b)); }

    /// Character value (x, gamma) = exp(2*pi*i * sum_j x_j gamma_j / n_j).
    cplx pairing(const Element& x, const Element& gamma) const;
    cplx pairing_idx(std::int64_t x, std::int64_t gamma) const;

    /// Exact test (x, gamma) == 1, by integer congruence. No floats involved.
    bool pairing_is_one(const Element& x, const Element& gamma) const;
    bool pairing_is_one_idx(std::int64_t x, std::int64_t gamma) const;

    /// All elements in lexicographic order.
    std::vector<Element> elements() const;

    std::string describe() const;

private:
    // Phase numerator r in [0, L): (x,gamma) = exp(2*pi*i*r/L), L = lcm(n_j).
    std::int64_t phase_numerator(const Element& x, const Element& gamma) const;

    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
    std::int64_t lcm_ = 1;
};

std::vector<Element> enumerate_elements(const GroupSpec& g);

inline GroupSpec make_group(std::vector<std::int64_t> factors) {
    return GroupSpec(std::move(factors));
}

inline cplx pairing(const GroupSpec& g, const Element& x, const Element& gamma) {
    return g.pairing(x, gamma);
}

/// Haar weights: mass per point of G and of the dual. Determined by the
/// configured Delta* so that m_{Delta*}({0}) = 1, m_Gamma(Pi_{Gamma/Delta}) = 1
/// and the Fourier transform is unitary (w_G * w_Gamma * |G| = 1).
struct HaarWeights {
    double w_G = 1.0;
    double w_Gamma = 1.0;

    static HaarWeights from_delta_star_order(std::int64_t group_order,
                                             std::int64_t delta_star_order) {
        HaarWeights w;
        w.w_Gamma = 1.0 / static_cast<double>(delta_star_order);
        w.w_G = static_cast<double>(delta_star_order) / static_cast<double>(group_order);
        return w;
    }
};

}  // namespace smi
