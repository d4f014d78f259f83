#include "smi/transform.hpp"

namespace smi {

Signal make_zero_signal(const GroupSpec& g, double weight) {
    return Signal{g, Vec::Zero(g.order()), weight};
}

Signal make_delta(const GroupSpec& g, const Element& at, double weight) {
    Signal f = make_zero_signal(g, weight);
    f.values[g.index_of(at)] = 1.0;
    return f;
}

Signal make_constant(const GroupSpec& g, cplx value, double weight) {
    return Signal{g, Vec::Constant(g.order(), value), weight};
}

cplx inner(const Signal& f, const Signal& g) {
    if (f.group != g.group) {
        throw Error("inner: group mismatch");
    }
    return f.weight * g.values.dot(f.values);  // Eigen dot conjugates its receiver
}

Signal fourier(const Signal& f) {
    const GroupSpec& g = f.group;
    const std::int64_t n = g.order();
    Vec out = Vec::Zero(n);
    for (std::int64_t gamma = 0; gamma < n; ++gamma) {
        cplx acc = 0.0;
        for (std::int64_t x = 0; x < n; ++x) {
            acc += f.values[x] * std::conj(g.pairing_idx(x, gamma));
        }
        out[gamma] = f.weight * acc;
    }
    const double w_dual = 1.0 / (f.weight * static_cast<double>(n));
    return Signal{g, std::move(out), w_dual};
}

Signal inverse_fourier(const Signal& fhat) {
    const GroupSpec& g = fhat.group;
    const std::int64_t n = g.order();
    Vec out = Vec::Zero(n);
    for (std::int64_t x = 0; x < n; ++x) {
        cplx acc = 0.0;
        for (std::int64_t gamma = 0; gamma < n; ++gamma) {
            acc += fhat.values[gamma] * g.pairing_idx(x, gamma);
        }
        out[x] = fhat.weight * acc;
    }
    const double w = 1.0 / (fhat.weight * static_cast<double>(n));
    return Signal{g, std::move(out), w};
}

Signal translate(const Signal& f, const Element& y) {
    const GroupSpec& g = f.group;
    const std::int64_t yi = g.index_of(y);
    Vec out(g.order());
    for (std::int64_t x = 0; x < g.order(); ++x) {
        out[x] = f.values[g.sub_idx(x, yi)];
    }
    return Signal{g, std::move(out), f.weight};
}

Signal modulate(const Signal& f, const Element& delta) {
    const GroupSpec& g = f.group;
    const std::int64_t di = g.index_of(delta);
    Vec out(g.order());
    for (std::int64_t x = 0; x < g.order(); ++x) {
        out[x] = g.pairing_idx(x, di) * f.values[x];
    }
    return Signal{g, std::move(out), f.weight};
}

ZakTable::ZakTable(const Signal& f, const Subgroup& delta_star, Storage storage)
    : group_(f.group),
      delta_star_(delta_star),
      storage_(storage),
      section_(quotient_section(f.group, delta_star)) {
    if (delta_star.parent() != group_) {
        throw Error("zak_table: Delta* parent mismatch");
    }
    const std::int64_t n = group_.order();
    const auto& hs = delta_star_.element_indices();
    const std::int64_t rows = storage_ == Storage::FullGrid ? n : section_.size();
    values_.resize(rows, n);
    for (std::int64_t r = 0; r < rows; ++r) {
        const std::int64_t x =
            storage_ == Storage::FullGrid ? r : section_.reps()[static_cast<std::size_t>(r)];
        for (std::int64_t xi = 0; xi < n; ++xi) {
            cplx acc = 0.0;
            for (auto h : hs) {
                acc += f.values[group_.sub_idx(x, h)] * group_.pairing_idx(h, xi);
            }
            values_(r, xi) = acc;
        }
    }
}

cplx ZakTable::at(std::int64_t x, std::int64_t xi) const {
    if (x < 0 || x >= group_.order() || xi < 0 || xi >= group_.order()) {
        throw Error("zak_table: index out of range");
    }
    if (storage_ == Storage::FullGrid) {
        return values_(x, xi);
    }
    const std::int64_t pos = section_.rep_position_of_idx(x);
    const std::int64_t rep = section_.reps()[static_cast<std::size_t>(pos)];
    const std::int64_t h = group_.sub_idx(x, rep);  // in Delta*
    return group_.pairing_idx(h, xi) * values_(pos, xi);
}

FiberField fiberize(const Signal& f, const SmiContext& ctx) {
    if (f.group != ctx.group) {
        throw Error("fiberize: signal group does not match context");
    }
    const ZakTable zak(f, ctx.standing.Delta_star);
    const auto& xs = ctx.sec_g_mod_dstar.reps();
    const auto& xis = ctx.sec_gamma_mod_estar.reps();
    const auto& es = ctx.sec_estar_mod_delta.reps();

    FiberField field;
    field.w_G = ctx.weights.w_G;
    field.w_Gamma = ctx.weights.w_Gamma;
    field.fibers.resize(ctx.fiber_dim(), ctx.n_cells());
    for (std::int64_t ix = 0; ix < ctx.n_x(); ++ix) {
        for (std::int64_t ixi = 0; ixi < ctx.n_xi(); ++ixi) {
            const std::int64_t c = ctx.cell(ix, ixi);
            for (std::int64_t ie = 0; ie < ctx.fiber_dim(); ++ie) {
                const std::int64_t omega =
                    ctx.group.add_idx(xis[static_cast<std::size_t>(ixi)],
                                      es[static_cast<std::size_t>(ie)]);
                field.fibers(ie, c) = zak.at(xs[static_cast<std::size_t>(ix)], omega);
            }
        }
    }
    return field;
}

Signal defiberize(const FiberField& field, const SmiContext& ctx) {
    if (field.fibers.rows() != ctx.fiber_dim() || field.fibers.cols() != ctx.n_cells()) {
        throw Error("defiberize: field shape does not match context");
    }
    const GroupSpec& g = ctx.group;
    const auto& xs = ctx.sec_g_mod_dstar.reps();
    const auto& xis = ctx.sec_gamma_mod_estar.reps();
    const auto& es = ctx.sec_estar_mod_delta.reps();
    const auto& hs = ctx.standing.Delta_star.element_indices();
    const double inv_dstar = 1.0 / static_cast<double>(ctx.standing.Delta_star.order());

    Signal f = make_zero_signal(g, ctx.weights.w_G);
    // Invert the Zak transform per x-rep: the characters {omega -> (h, omega)}
    // over h in Delta* are orthogonal on any transversal of Gamma/Delta.
    for (std::int64_t ix = 0; ix < ctx.n_x(); ++ix) {
        const std::int64_t x = xs[static_cast<std::size_t>(ix)];
        for (auto h : hs) {
            cplx acc = 0.0;
            for (std::int64_t ie = 0; ie < ctx.fiber_dim(); ++ie) {
                for (std::int64_t ixi = 0; ixi < ctx.n_xi(); ++ixi) {
                    const std::int64_t omega =
                        g.add_idx(xis[static_cast<std::size_t>(ixi)],
                                  es[static_cast<std::size_t>(ie)]);
                    acc += field.fibers(ie, ctx.cell(ix, ixi)) *
                           std::conj(g.pairing_idx(h, omega));
                }
            }
            f.values[g.sub_idx(x, h)] = inv_dstar * acc;
        }
    }
    return f;
}

Mat tilde_fiberize(const Signal& f, const SmiContext& ctx) {
    if (f.group != ctx.group) {
        throw Error("tilde_fiberize: signal group does not match context");
    }
    const auto& xs = ctx.sec_g_mod_dstar.reps();
    const auto& hs = ctx.standing.Delta_star.element_indices();
    Mat out(static_cast<std::int64_t>(hs.size()), ctx.n_x());
    for (std::int64_t ix = 0; ix < ctx.n_x(); ++ix) {
        for (std::size_t ih = 0; ih < hs.size(); ++ih) {
            out(static_cast<std::int64_t>(ih), ix) =
                f.values[ctx.group.add_idx(xs[static_cast<std::size_t>(ix)], hs[ih])];
        }
    }
    return out;
}

Mat t_e_apply(const Vec& a, const SmiContext& ctx) {
    const auto& hs = ctx.standing.Delta_star.element_indices();
    if (a.size() != static_cast<std::int64_t>(hs.size())) {
        throw Error("t_e_apply: vector length does not match |Delta*|");
    }
    const auto& xis = ctx.sec_gamma_mod_estar.reps();
    const auto& es = ctx.sec_estar_mod_delta.reps();
    Mat out(ctx.fiber_dim(), ctx.n_xi());
    for (std::int64_t ixi = 0; ixi < ctx.n_xi(); ++ixi) {
        for (std::int64_t ie = 0; ie < ctx.fiber_dim(); ++ie) {
            const std::int64_t omega = ctx.group.add_idx(xis[static_cast<std::size_t>(ixi)],
                                                         es[static_cast<std::size_t>(ie)]);
            cplx acc = 0.0;
            for (std::size_t ih = 0; ih < hs.size(); ++ih) {
                // eta_h(omega) = (h, -omega)
                acc += a[static_cast<std::int64_t>(ih)] *
                       std::conj(ctx.group.pairing_idx(hs[ih], omega));
            }
            out(ie, ixi) = acc;
        }
    }
    return out;
}

}  // namespace smi
