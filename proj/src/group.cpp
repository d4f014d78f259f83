#include "smi/group.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace smi {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::int64_t mod_pos(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}
}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw Error("invalid group: factor list is empty");
    }
    for (auto n : factors_) {
        if (n < 1) {
            throw Error("invalid group: factor " + std::to_string(n) + " is not positive");
        }
        order_ *= n;
        lcm_ = std::lcm(lcm_, n);
    }
}

Element GroupSpec::canonicalize(const Element& x) const {
    if (x.coords.size() != rank()) {
        throw Error("invalid element: expected " + std::to_string(rank()) +
                    " coordinates, got " + std::to_string(x.coords.size()));
    }
    Element r = x;
    for (std::size_t j = 0; j < rank(); ++j) {
        r.coords[j] = mod_pos(r.coords[j], factors_[j]);
    }
    return r;
}

void GroupSpec::validate(const Element& x) const {
    if (x.coords.size() != rank()) {
        throw Error("invalid element: rank mismatch");
    }
    for (std::size_t j = 0; j < rank(); ++j) {
        if (x.coords[j] < 0 || x.coords[j] >= factors_[j]) {
            throw Error("invalid element: coordinate " + std::to_string(x.coords[j]) +
                        " out of range for Z_" + std::to_string(factors_[j]));
        }
    }
}

std::int64_t GroupSpec::index_of(const Element& x) const {
    validate(x);
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
        idx = idx * factors_[j] + x.coords[j];
    }
    return idx;
}

Element GroupSpec::element_at(std::int64_t idx) const {
    if (idx < 0 || idx >= order_) {
        throw Error("element index out of range");
    }
    Element x(std::vector<std::int64_t>(rank(), 0));
    for (std::size_t j = rank(); j-- > 0;) {
        x.coords[j] = idx % factors_[j];
        idx /= factors_[j];
    }
    return x;
}

Element GroupSpec::add(const Element& a, const Element& b) const {
    validate(a);
    validate(b);
    Element r = a;
    for (std::size_t j = 0; j < rank(); ++j) {
        r.coords[j] = mod_pos(r.coords[j] + b.coords[j], factors_[j]);
    }
    return r;
}

Element GroupSpec::neg(const Element& a) const {
    validate(a);
    Element r = a;
    for (std::size_t j = 0; j < rank(); ++j) {
        r.coords[j] = mod_pos(-r.coords[j], factors_[j]);
    }
    return r;
}

Element GroupSpec::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

std::int64_t GroupSpec::add_idx(std::int64_t a, std::int64_t b) const {
    std::int64_t idx = 0;
    std::int64_t mult = 1;
    for (std::size_t j = rank(); j-- > 0;) {
        const std::int64_t n = factors_[j];
        idx += ((a % n) + (b % n)) % n * mult;
        mult *= n;
        a /= n;
        b /= n;
    }
    return idx;
}

std::int64_t GroupSpec::neg_idx(std::int64_t a) const {
    std::int64_t idx = 0;
    std::int64_t mult = 1;
    for (std::size_t j = rank(); j-- > 0;) {
        const std::int64_t n = factors_[j];
        idx += mod_pos(-(a % n), n) * mult;
        mult *= n;
        a /= n;
    }
    return idx;
}

std::int64_t GroupSpec::phase_numerator(const Element& x, const Element& gamma) const {
    std::int64_t r = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
        const std::int64_t n = factors_[j];
        const std::int64_t t = mod_pos(x.coords[j] * gamma.coords[j], n);
        r = (r + t * (lcm_ / n)) % lcm_;
    }
    return r;
}

cplx GroupSpec::pairing(const Element& x, const Element& gamma) const {
    validate(x);
    validate(gamma);
    const std::int64_t r = phase_numerator(x, gamma);
    return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(lcm_));
}

cplx GroupSpec::pairing_idx(std::int64_t x, std::int64_t gamma) const {
    return pairing(element_at(x), element_at(gamma));
}

bool GroupSpec::pairing_is_one(const Element& x, const Element& gamma) const {
    validate(x);
    validate(gamma);
    return phase_numerator(x, gamma) == 0;
}

bool GroupSpec::pairing_is_one_idx(std::int64_t x, std::int64_t gamma) const {
    return pairing_is_one(element_at(x), element_at(gamma));
}

std::vector<Element> GroupSpec::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) {
        out.push_back(element_at(i));
    }
    return out;
}

std::string GroupSpec::describe() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < rank(); ++j) {
        if (j) os << " x ";
        os << "Z_" << factors_[j];
    }
    return os.str();
}

std::vector<Element> enumerate_elements(const GroupSpec& g) { return g.elements(); }

}  // namespace smi
