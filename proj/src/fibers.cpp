#include "kalu/fibers.hpp"

namespace kalu {

namespace {

// Strengthened targets of q over the base's positions. Accepts q over the
// full frame of ctx.datum (restricting it) or already over the base's
// positions; the two readings coincide whenever both apply.
std::vector<int> restricted_targets(const PosetContext& ctx, const CondVector& q) {
    const int nu = ctx.base.arity();
    std::vector<int> s(nu);
    if (static_cast<int>(q.size()) == ctx.datum.arity() &&
        ctx.datum.arity() != nu) {
        for (int b = 0; b < nu; ++b) {
            const int pos = ctx.base.positions[b];
            s[b] = ctx.datum.I[pos] + q[pos];
        }
    } else if (static_cast<int>(q.size()) == nu) {
        for (int b = 0; b < nu; ++b) s[b] = ctx.sub.I[b] + q[b];
    } else {
        throw validation_error("vector " + to_text(q) + " fits neither the frame arity " +
                               std::to_string(ctx.datum.arity()) + " nor the base arity " +
                               std::to_string(nu));
    }
    const auto t = ctx.base_targets();
    for (int b = 0; b < nu; ++b) {
        if (s[b] < t[b])
            throw validation_error("vector " + to_text(q) +
                                   " drops below the base targets at position " +
                                   std::to_string(b + 1));
    }
    CondVector offsets(nu);
    for (int b = 0; b < nu; ++b) offsets[b] = s[b] - ctx.sub.I[b];
    require_valid_targets(ctx.sub, offsets);
    return s;
}

}  // namespace

IntPoly a_poly(const PosetContext& ctx, const CondVector& q) {
    const auto t = ctx.base_targets();
    const auto s = restricted_targets(ctx, q);
    IntPoly out = IntPoly::constant(1);
    for (int b = 0; b < ctx.base.arity(); ++b) {
        const int prev = b == 0 ? 0 : t[b - 1];
        out = out * gauss_poincare(t[b] - prev, s[b] - prev);
    }
    return out;
}

long dim_f(const PosetContext& ctx, const CondVector& q) {
    const auto t = ctx.base_targets();
    const auto s = restricted_targets(ctx, q);
    long dim = 0;
    for (int b = 0; b < ctx.base.arity(); ++b) {
        const int prev = b == 0 ? 0 : t[b - 1];
        dim += static_cast<long>(s[b] - t[b]) * (t[b] - prev);
    }
    return dim;
}

IntPoly g_fiber_poly(const PosetContext& ctx, const CondVector& q) {
    const auto iota = ctx.base_targets();
    const auto s = restricted_targets(ctx, q);
    const auto& zeta = ctx.base.j_bar;
    const int nu = ctx.base.arity();
    IntPoly out = IntPoly::constant(1);
    if (nu == 0) return out;
    const int last = nu - 1;
    out = gauss_poincare(s[last] - iota[last],
                         ctx.datum.l - ctx.datum.k - zeta[last] + iota[last] + s[last] - iota[last]);
    for (int a = 0; a + 1 < nu; ++a) {
        const int eps = s[a] - iota[a];
        out = out * gauss_poincare(eps, (zeta[a + 1] - iota[a + 1]) - (zeta[a] - iota[a]) + eps);
    }
    return out;
}

long dim_g(const PosetContext& ctx, const CondVector& q) {
    const auto iota = ctx.base_targets();
    const auto s = restricted_targets(ctx, q);
    const int nu = ctx.base.arity();
    if (nu == 0) return 0;
    const Partition lam = lambda_of(ctx.sub, ctx.base.p_bar);
    auto lam_at = [&](int a) { return a < nu ? lam[iota[a] - 1] : 0; };
    long dim = 0;
    for (int a = 0; a < nu; ++a) dim += static_cast<long>(s[a] - iota[a]) * (lam_at(a) - lam_at(a + 1));
    return dim;
}

long b_form(const std::vector<int>& eps) {
    const int nu = static_cast<int>(eps.size());
    if (nu == 0) return 0;
    long value = static_cast<long>(eps[nu - 1]) * eps[nu - 1];
    for (int a = 0; a + 1 < nu; ++a)
        value += static_cast<long>(eps[a]) * eps[a] - static_cast<long>(eps[a]) * eps[a + 1];
    return value;
}

long codim_between(const SchubertDatum& datum, const CondVector& p, const CondVector& q) {
    const Partition lp = lambda_of(datum, p);
    const Partition lq = lambda_of(datum, q);
    long m = 0;
    for (int a = 0; a < datum.k; ++a) {
        if (lq[a] < lp[a])
            throw validation_error("variety of " + to_text(q) + " is not contained in that of " +
                                   to_text(p));
        m += lq[a] - lp[a];
    }
    return m;
}

long zelevinsky_codim(const PosetContext& ctx, const CondVector& q) {
    const auto iota = ctx.base_targets();
    const auto s = restricted_targets(ctx, q);
    const int nu = ctx.base.arity();
    if (nu == 0) return 0;
    const Partition lam = lambda_of(ctx.sub, ctx.base.p_bar);
    auto lam_at = [&](int a) { return a < nu ? lam[iota[a] - 1] : 0; };
    std::vector<int> eps(nu);
    long m = 0;
    for (int a = 0; a < nu; ++a) {
        eps[a] = s[a] - iota[a];
        const int prev = a == 0 ? 0 : iota[a - 1];
        m += static_cast<long>(eps[a]) * (iota[a] - prev + lam_at(a) - lam_at(a + 1));
    }
    return m + b_form(eps);
}

FiberReport fiber_report(const PosetContext& ctx, const CondVector& q) {
    FiberReport r;
    const auto iota = ctx.base_targets();
    const auto s = restricted_targets(ctx, q);
    const int nu = ctx.base.arity();
    r.epsilon.resize(nu);
    for (int a = 0; a < nu; ++a) r.epsilon[a] = s[a] - iota[a];
    r.a = a_poly(ctx, q);
    r.dim_f = dim_f(ctx, q);
    r.h_g = g_fiber_poly(ctx, q);
    r.dim_g = dim_g(ctx, q);
    r.b_form = b_form(r.epsilon);
    CondVector offsets(nu);
    for (int a = 0; a < nu; ++a) offsets[a] = s[a] - ctx.sub.I[a];
    r.m = area(lambda_of(ctx.sub, offsets)) - area(lambda_of(ctx.sub, ctx.base.p_bar));
    if (r.m != r.dim_f + r.dim_g + r.b_form)
        throw internal_error("codimension of " + to_text(q) + " does not split into fiber "
                             "dimensions plus the quadratic form");
    return r;
}

}  // namespace kalu
