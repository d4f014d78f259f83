#pragma once

#include <Eigen/Dense>

#include "smi/context.hpp"
#include "smi/group.hpp"
#include "smi/lattice.hpp"

namespace smi {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// A complex-valued function on a finite abelian group, with its Haar weight
/// (mass per point).
struct Signal {
    GroupSpec group;
    Vec values;      // indexed by enumerate_elements order
    double weight = 1.0;

    double norm_sq() const { return weight * values.squaredNorm(); }
    double norm() const { return std::sqrt(norm_sq()); }
};

Signal make_zero_signal(const GroupSpec& g, double weight);
Signal make_delta(const GroupSpec& g, const Element& at, double weight);
Signal make_constant(const GroupSpec& g, cplx value, double weight);

/// Weighted inner product <f, g> = w * sum f(x) conj(g(x)).
cplx inner(const Signal& f, const Signal& g);

/// f_hat(gamma) = w_G * sum_x f(x) (x, -gamma). Output lives on the dual
/// presentation with weight 1/(w_G |G|), making the transform unitary.
Signal fourier(const Signal& f);
Signal inverse_fourier(const Signal& fhat);

/// T_y f(x) = f(x - y).
Signal translate(const Signal& f, const Element& y);
/// M_delta f(x) = (x, delta) f(x).
Signal modulate(const Signal& f, const Element& delta);

/// Zak transform Zf(x, xi) = sum_{h in Delta*} f(x - h) (h, xi).
///
/// By default only rows for the canonical section Pi_{G/Delta*} are stored;
/// values at arbitrary x follow from quasi-periodicity
/// Z(x + h, xi) = (h, xi) Z(x, xi). Full-grid mode materializes every row.
class ZakTable {
public:
    enum class Storage { SectionRestricted, FullGrid };

    ZakTable(const Signal& f, const Subgroup& delta_star,
             Storage storage = Storage::SectionRestricted);

    const GroupSpec& group() const { return group_; }
    const Subgroup& delta_star() const { return delta_star_; }
    Storage storage() const { return storage_; }

    /// Z(x, xi) for arbitrary element indices.
    cplx at(std::int64_t x, std::int64_t xi) const;

private:
    GroupSpec group_;
    Subgroup delta_star_;
    Storage storage_;
    SectionSet section_;  // canonical Pi_{G/Delta*}
    Mat values_;          // rows: section reps (or all of G), cols: all of Gamma
};

inline ZakTable zak_table(const Signal& f, const Subgroup& delta_star,
                          ZakTable::Storage storage = ZakTable::Storage::SectionRestricted) {
    return ZakTable(f, delta_star, storage);
}

/// Image of a signal under the fiberization isometry: one vector in
/// C^{|Pi_{E*/Delta}|} per cell (x, xi) in Pi_{G/Delta*} x Pi_{Gamma/E*}.
/// Stored as a fiber_dim x n_cells matrix, cells ordered x-major.
struct FiberField {
    Mat fibers;
    double w_G = 1.0;
    double w_Gamma = 1.0;

    double norm_sq() const { return w_G * w_Gamma * fibers.squaredNorm(); }
    double norm() const { return std::sqrt(norm_sq()); }
};

/// T f(x, xi) = {Zf(x, xi + e)}_{e in Pi_{E*/Delta}}.
FiberField fiberize(const Signal& f, const SmiContext& ctx);
Signal defiberize(const FiberField& field, const SmiContext& ctx);

/// Intermediate isometry T~_{Delta*} f(x) = {f(x + h)}_{h in Delta*},
/// x over Pi_{G/Delta*}. Columns indexed by the context's x-section,
/// rows by Delta* elements in sorted order.
Mat tilde_fiberize(const Signal& f, const SmiContext& ctx);

/// T_E a(xi) = {sum_h a_h eta_h(xi + e)}_e for a in l^2(Delta*)
/// (a indexed like the rows of tilde_fiberize). Returns a fiber_dim x n_xi
/// matrix.
Mat t_e_apply(const Vec& a, const SmiContext& ctx);

}  // namespace smi
