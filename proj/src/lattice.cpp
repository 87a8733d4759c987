#include "kalu/lattice.hpp"

#include <algorithm>

namespace kalu {

PosetContext make_context(const SchubertDatum& datum, const CondVector& p) {
    PosetContext ctx;
    ctx.datum = datum;
    ctx.base = essentialize(datum, p);
    ctx.sub.k = datum.k;
    ctx.sub.l = datum.l;
    ctx.sub.I = ctx.base.i_bar;
    ctx.sub.J = ctx.base.j_bar;
    return ctx;
}

bool is_admissible(const PosetContext& ctx, const CondVector& q) {
    const int nu = ctx.base.arity();
    if (static_cast<int>(q.size()) != nu)
        throw validation_error("vector " + to_text(q) + " does not have the base arity " +
                               std::to_string(nu));
    for (int a = 0; a < nu; ++a)
        if (q[a] < ctx.base.p_bar[a]) return false;
    return validate_targets(ctx.sub, q).empty();
}

CondVector adapt(const PosetContext& ctx, const CondVector& q) {
    require_valid_targets(ctx.datum, q);
    const Partition lam_base = lambda_of(ctx.sub, ctx.base.p_bar);
    const Partition lam_q = lambda_of(ctx.datum, q);
    for (int a = 0; a < ctx.datum.k; ++a)
        if (lam_q[a] < lam_base[a])
            throw validation_error("variety of " + to_text(q) +
                                   " is not contained in the base variety");
    CondVector out;
    out.reserve(ctx.base.positions.size());
    for (int pos : ctx.base.positions) out.push_back(q[pos]);
    return out;
}

bool leq(const SchubertDatum& datum, const CondVector& p, const CondVector& q) {
    const Partition lp = lambda_of(datum, p);
    const Partition lq = lambda_of(datum, q);
    for (int a = 0; a < datum.k; ++a)
        if (lq[a] < lp[a]) return false;
    return true;
}

long distance(const CondVector& p, const CondVector& q) {
    if (p.size() != q.size())
        throw validation_error("vectors " + to_text(p) + " and " + to_text(q) +
                               " have different arities");
    long d = 0;
    for (size_t a = 0; a < p.size(); ++a) {
        if (q[a] < p[a])
            throw validation_error("vectors " + to_text(p) + " and " + to_text(q) +
                                   " are not componentwise comparable");
        d += q[a] - p[a];
    }
    return d;
}

std::vector<CondVector> interval(const PosetContext& ctx, const CondVector& q) {
    if (!is_admissible(ctx, q))
        throw validation_error("vector " + to_text(q) + " is not admissible for the base");
    const CondVector& lo = ctx.base.p_bar;
    const int nu = ctx.base.arity();
    std::vector<CondVector> found;
    CondVector cur = lo;
    while (true) {
        if (is_admissible(ctx, cur)) found.push_back(cur);
        int a = nu - 1;
        while (a >= 0 && cur[a] == q[a]) {
            cur[a] = lo[a];
            --a;
        }
        if (a < 0) break;
        ++cur[a];
    }
    std::stable_sort(found.begin(), found.end(),
                     [&](const CondVector& x, const CondVector& y) {
                         const long dx = distance(lo, x), dy = distance(lo, y);
                         if (dx != dy) return dx < dy;
                         return x < y;
                     });
    return found;
}

CondVector max_admissible(const PosetContext& ctx) {
    CondVector q(ctx.base.arity());
    for (int a = 0; a < ctx.base.arity(); ++a) q[a] = ctx.datum.k - ctx.sub.I[a];
    if (!is_admissible(ctx, q))
        throw internal_error("saturated vector " + to_text(q) + " is not admissible");
    return q;
}

std::vector<CondVector> enumerate_admissible(const SchubertDatum& datum) {
    PosetContext ctx = make_context(datum, CondVector(datum.arity(), 0));
    return interval(ctx, max_admissible(ctx));
}

}  // namespace kalu
