#pragma once

#include <vector>

#include "smi/context.hpp"
#include "smi/transform.hpp"

namespace smi {

/// Shift-modulation range function over the cells of
/// Pi_{G/Delta*} x Pi_{Gamma/E*}: per cell an orthonormal basis (columns) of
/// the fiber subspace J(x, xi) in C^{|Pi_{E*/Delta}|}.
struct RangeFunctionTable {
    std::int64_t n_x = 0;
    std::int64_t n_xi = 0;
    std::int64_t fiber_dim = 0;
    double tau = 1e-9;                 // relative singular-value cutoff
    std::vector<Mat> bases;            // per cell, fiber_dim x rank
    std::vector<std::int64_t> ranks;   // per cell

    std::int64_t cell(std::int64_t ix, std::int64_t ixi) const { return ix * n_xi + ixi; }
};

struct MembershipVerdict {
    bool is_member = false;
    double max_residual = 0.0;         // worst cellwise fiber residual
    std::int64_t worst_cell_x = 0;     // element index in G
    std::int64_t worst_cell_xi = 0;    // element index in Gamma
    double global_residual = 0.0;      // weighted distance to the space
};

constexpr double kDefaultTau = 1e-9;
constexpr double kDefaultEpsilon = 1e-8;

/// J(x, xi) = span{T(T_d phi)(x, xi) : d in Pi_{F/E}, phi in A},
/// orthonormalized cellwise by SVD with relative cutoff tau.
RangeFunctionTable build_range_function(const std::vector<Signal>& A, const SmiContext& ctx,
                                        double tau = kDefaultTau);

/// Tests Tf(x, xi) in J(x, xi) for every cell; member iff the worst cellwise
/// residual is at most eps * ||f||. The zero signal is always a member.
MembershipVerdict membership(const Signal& f, const RangeFunctionTable& J, const SmiContext& ctx,
                             double eps = kDefaultEpsilon);

/// Orthogonal projection onto the SMI space of J: cellwise B B^H on the
/// fibers, pulled back through the fiberization isometry.
Signal project(const Signal& f, const RangeFunctionTable& J, const SmiContext& ctx);

struct PeriodicityReport {
    double max_principal_angle = 0.0;
    std::int64_t worst_x = 0;   // element index of the base-section point
    std::int64_t worst_d = 0;   // element index of the offending shift
};

/// Largest principal angle between J(x, xi) and J(x - d, xi) over all
/// x in Pi_{G/(F+Delta*)}, d in Pi_{F/E} and xi.
PeriodicityReport periodicity_check(const RangeFunctionTable& J, const SmiContext& ctx);

/// Rank per cell, x-major.
std::vector<std::int64_t> dimension_map(const RangeFunctionTable& J);

/// Independent oracle: least-squares residual of f against the column span of
/// every M_delta T_y phi (delta in Delta, y in F, phi in A) in the weighted
/// inner product. Refuses when |Delta| * |F| * |A| exceeds max_columns.
MembershipVerdict brute_force_membership(const Signal& f, const std::vector<Signal>& A,
                                         const SmiContext& ctx, double eps = kDefaultEpsilon,
                                         std::int64_t max_columns = 20000);

/// Plain E-shift-invariance test inside l^2(Delta*) through T_E: a is a
/// member of the E-shift-invariant space generated by the given vectors iff
/// every xi-fiber of T_E a lies in the span of the generators' fibers.
MembershipVerdict shift_range_membership(const Vec& a, const std::vector<Vec>& generators,
                                         const SmiContext& ctx, double eps = kDefaultEpsilon,
                                         double tau = kDefaultTau);

/// Largest principal angle between the column spans of two orthonormal bases.
/// Returns pi/2 when the ranks differ, 0 when both are trivial.
double largest_principal_angle(const Mat& B1, const Mat& B2);

}  // namespace smi
