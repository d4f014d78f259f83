#include "smi/range_function.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace smi {

namespace {

/// Orthonormal basis of the column span, keeping directions with
/// sigma > tau * sigma_max.
Mat orthonormal_basis(const Mat& span, double tau) {
    if (span.cols() == 0) {
        return Mat(span.rows(), 0);
    }
    Eigen::JacobiSVD<Mat> svd(span, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    const double smax = sigma.size() > 0 ? sigma[0] : 0.0;
    std::int64_t rank = 0;
    if (smax > 0.0) {
        for (std::int64_t i = 0; i < sigma.size(); ++i) {
            if (sigma[i] > tau * smax) ++rank;
        }
    }
    return svd.matrixU().leftCols(rank);
}

}  // namespace

double largest_principal_angle(const Mat& B1, const Mat& B2) {
    if (B1.cols() != B2.cols()) {
        return std::numbers::pi / 2.0;
    }
    if (B1.cols() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Mat> svd(Mat(B1.adjoint() * B2));
    const double c = std::clamp(svd.singularValues().minCoeff(), -1.0, 1.0);
    if (c < std::numbers::sqrt2 / 2.0) {
        return std::acos(c);
    }
    // Near-aligned subspaces: acos loses half the digits, so use the sine of
    // the angle, sigma_max of (I - B1 B1^H) B2.
    Eigen::JacobiSVD<Mat> residual_svd(Mat(B2 - B1 * (B1.adjoint() * B2)));
    const double s = std::clamp(residual_svd.singularValues().maxCoeff(), 0.0, 1.0);
    return std::asin(s);
}

RangeFunctionTable build_range_function(const std::vector<Signal>& A, const SmiContext& ctx,
                                        double tau) {
    if (A.empty()) {
        throw Error("build_range_function: empty generator set");
    }
    for (const auto& phi : A) {
        if (phi.group != ctx.group) {
            throw Error("build_range_function: generator group does not match context");
        }
    }
    const auto& ds = ctx.sec_f_mod_e.reps();
    std::vector<FiberField> fields;
    fields.reserve(ds.size() * A.size());
    for (auto d : ds) {
        const Element de = ctx.group.element_at(d);
        for (const auto& phi : A) {
            fields.push_back(fiberize(translate(phi, de), ctx));
        }
    }

    RangeFunctionTable J;
    J.n_x = ctx.n_x();
    J.n_xi = ctx.n_xi();
    J.fiber_dim = ctx.fiber_dim();
    J.tau = tau;
    J.bases.reserve(static_cast<std::size_t>(ctx.n_cells()));
    J.ranks.reserve(static_cast<std::size_t>(ctx.n_cells()));
    Mat span(ctx.fiber_dim(), static_cast<std::int64_t>(fields.size()));
    for (std::int64_t c = 0; c < ctx.n_cells(); ++c) {
        for (std::size_t k = 0; k < fields.size(); ++k) {
            span.col(static_cast<std::int64_t>(k)) = fields[k].fibers.col(c);
        }
        Mat basis = orthonormal_basis(span, tau);
        J.ranks.push_back(basis.cols());
        J.bases.push_back(std::move(basis));
    }
    return J;
}

MembershipVerdict membership(const Signal& f, const RangeFunctionTable& J, const SmiContext& ctx,
                             double eps) {
    if (J.n_x != ctx.n_x() || J.n_xi != ctx.n_xi() || J.fiber_dim != ctx.fiber_dim()) {
        throw Error("membership: range table does not match context");
    }
    if (eps <= 0.0) {
        throw Error("membership: epsilon must be positive");
    }
    const FiberField field = fiberize(f, ctx);

    MembershipVerdict v;
    double residual_sq_sum = 0.0;
    for (std::int64_t ix = 0; ix < J.n_x; ++ix) {
        for (std::int64_t ixi = 0; ixi < J.n_xi; ++ixi) {
            const std::int64_t c = J.cell(ix, ixi);
            const Vec fiber = field.fibers.col(c);
            const Mat& B = J.bases[static_cast<std::size_t>(c)];
            const double r = (fiber - B * (B.adjoint() * fiber)).norm();
            residual_sq_sum += r * r;
            if (r > v.max_residual) {
                v.max_residual = r;
                v.worst_cell_x = ctx.sec_g_mod_dstar.reps()[static_cast<std::size_t>(ix)];
                v.worst_cell_xi = ctx.sec_gamma_mod_estar.reps()[static_cast<std::size_t>(ixi)];
            }
        }
    }
    v.global_residual = std::sqrt(ctx.weights.w_G * ctx.weights.w_Gamma * residual_sq_sum);
    v.is_member = v.max_residual <= eps * f.norm();
    return v;
}

Signal project(const Signal& f, const RangeFunctionTable& J, const SmiContext& ctx) {
    if (J.n_x != ctx.n_x() || J.n_xi != ctx.n_xi() || J.fiber_dim != ctx.fiber_dim()) {
        throw Error("project: range table does not match context");
    }
    FiberField field = fiberize(f, ctx);
    for (std::int64_t c = 0; c < ctx.n_cells(); ++c) {
        const Mat& B = J.bases[static_cast<std::size_t>(c)];
        field.fibers.col(c) = B * (B.adjoint() * field.fibers.col(c));
    }
    return defiberize(field, ctx);
}

PeriodicityReport periodicity_check(const RangeFunctionTable& J, const SmiContext& ctx) {
    PeriodicityReport rep;
    const std::int64_t n0 = ctx.sec_g_mod_fplusdstar.size();
    const std::int64_t nd = ctx.sec_f_mod_e.size();
    // Pi_{G/Delta*} is d-major over (Pi_{F/E}, Pi_{G/(F+Delta*)}), so the cell
    // of x0 - d sits at x-position id * n0 + i0.
    for (std::int64_t i0 = 0; i0 < n0; ++i0) {
        for (std::int64_t id = 0; id < nd; ++id) {
            for (std::int64_t ixi = 0; ixi < J.n_xi; ++ixi) {
                const Mat& base = J.bases[static_cast<std::size_t>(J.cell(i0, ixi))];
                const Mat& shifted = J.bases[static_cast<std::size_t>(J.cell(id * n0 + i0, ixi))];
                const double angle = largest_principal_angle(base, shifted);
                if (angle > rep.max_principal_angle) {
                    rep.max_principal_angle = angle;
                    rep.worst_x = ctx.sec_g_mod_fplusdstar.reps()[static_cast<std::size_t>(i0)];
                    rep.worst_d = ctx.sec_f_mod_e.reps()[static_cast<std::size_t>(id)];
                }
            }
        }
    }
    return rep;
}

std::vector<std::int64_t> dimension_map(const RangeFunctionTable& J) { return J.ranks; }

MembershipVerdict brute_force_membership(const Signal& f, const std::vector<Signal>& A,
                                         const SmiContext& ctx, double eps,
                                         std::int64_t max_columns) {
    if (A.empty()) {
        throw Error("brute_force_membership: empty generator set");
    }
    if (f.group != ctx.group) {
        throw Error("brute_force_membership: signal group does not match context");
    }
    const std::int64_t ncols = ctx.standing.Delta.order() * ctx.standing.F.order() *
                               static_cast<std::int64_t>(A.size());
    if (ncols > max_columns) {
        throw Error("brute_force_membership: scale guard exceeded (" + std::to_string(ncols) +
                    " columns, limit " + std::to_string(max_columns) + ")");
    }
    const GroupSpec& g = ctx.group;
    Mat M(g.order(), ncols);
    std::int64_t col = 0;
    for (auto delta : ctx.standing.Delta.element_indices()) {
        const Element de = g.element_at(delta);
        for (auto y : ctx.standing.F.element_indices()) {
            const Element ye = g.element_at(y);
            for (const auto& phi : A) {
                M.col(col++) = modulate(translate(phi, ye), de).values;
            }
        }
    }
    const Vec coeffs = M.completeOrthogonalDecomposition().solve(f.values);
    const double resid = std::sqrt(ctx.weights.w_G) * (f.values - M * coeffs).norm();

    MembershipVerdict v;
    v.max_residual = resid;
    v.global_residual = resid;
    v.is_member = resid <= eps * f.norm();
    return v;
}

MembershipVerdict shift_range_membership(const Vec& a, const std::vector<Vec>& generators,
                                         const SmiContext& ctx, double eps, double tau) {
    if (generators.empty()) {
        throw Error("shift_range_membership: empty generator set");
    }
    const Mat fa = t_e_apply(a, ctx);
    std::vector<Mat> gen_fields;
    gen_fields.reserve(generators.size());
    for (const auto& b : generators) {
        gen_fields.push_back(t_e_apply(b, ctx));
    }

    const double a_norm = a.norm();
    MembershipVerdict v;
    double residual_sq_sum = 0.0;
    Mat span(ctx.fiber_dim(), static_cast<std::int64_t>(gen_fields.size()));
    for (std::int64_t ixi = 0; ixi < ctx.n_xi(); ++ixi) {
        for (std::size_t k = 0; k < gen_fields.size(); ++k) {
            span.col(static_cast<std::int64_t>(k)) = gen_fields[k].col(ixi);
        }
        const Mat B = orthonormal_basis(span, tau);
        const Vec fiber = fa.col(ixi);
        const double r = (fiber - B * (B.adjoint() * fiber)).norm();
        residual_sq_sum += r * r;
        if (r > v.max_residual) {
            v.max_residual = r;
            v.worst_cell_xi = ctx.sec_gamma_mod_estar.reps()[static_cast<std::size_t>(ixi)];
        }
    }
    v.global_residual = std::sqrt(ctx.weights.w_Gamma * residual_sq_sum);
    v.is_member = v.max_residual <= eps * a_norm;
    return v;
}

}  // namespace smi
