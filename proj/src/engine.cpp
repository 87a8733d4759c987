#include "kalu/engine.hpp"

#include <algorithm>

namespace kalu {

namespace {

std::string pair_text(const CondVector& tau, const CondVector& sigma) {
    return "(" + to_text(tau) + " -> " + to_text(sigma) + ")";
}

// Odometer over the box [lo, hi], visiting every componentwise-intermediate
// vector exactly once.
template <typename F>
void for_box(const CondVector& lo, const CondVector& hi, F&& visit) {
    CondVector cur = lo;
    while (true) {
        visit(cur);
        size_t a = cur.size();
        while (a > 0 && cur[a - 1] == hi[a - 1]) {
            cur[a - 1] = lo[a - 1];
            --a;
        }
        if (a == 0) break;
        ++cur[a - 1];
    }
}

}  // namespace

KaLuTable::KaLuTable(const SchubertDatum& datum, const CondVector& p)
    : ctx_(make_context(datum, p)) {
    unit_.a = unit_.r = unit_.g = unit_.b = IntPoly::constant(1);
    unit_.m = 0;
}

const PosetContext& KaLuTable::tau_context(const CondVector& tau) {
    auto it = taus_.find(tau);
    if (it == taus_.end()) it = taus_.emplace(tau, make_context(ctx_.sub, tau)).first;
    return it->second;
}

const Partition& KaLuTable::lam(const CondVector& v) {
    auto it = lams_.find(v);
    if (it == lams_.end()) it = lams_.emplace(v, lambda_of(ctx_.sub, v)).first;
    return it->second;
}

bool KaLuTable::admissible(const CondVector& v) {
    auto it = adm_.find(v);
    if (it == adm_.end()) it = adm_.emplace(v, is_admissible(ctx_, v)).first;
    return it->second;
}

const CondVector& KaLuTable::reduction(const CondVector& tau, const CondVector& sigma) {
    auto it = reductions_.find({tau, sigma});
    if (it != reductions_.end()) return it->second;
    const PosetContext& tc = tau_context(tau);
    CondVector rho;
    rho.reserve(tc.base.positions.size());
    for (int pos : tc.base.positions) rho.push_back(sigma[pos]);
    CondVector reduced = presentation_over(ctx_.sub, lambda_of(tc.sub, rho));
    return reductions_.emplace(PairKey{tau, sigma}, std::move(reduced)).first->second;
}

bool KaLuTable::admissible_over(const CondVector& tau, const CondVector& sigma) {
    return reduction(tau, sigma) == sigma;
}

const Cell& KaLuTable::cell(const CondVector& tau, const CondVector& sigma) const {
    if (tau == sigma) return unit_;
    auto it = cells_.find({tau, sigma});
    if (it != cells_.end()) return it->second;
    auto al = aliases_.find({tau, sigma});
    if (al != aliases_.end()) {
        if (al->second.first == al->second.second) return unit_;
        it = cells_.find(al->second);
        if (it != cells_.end()) return it->second;
    }
    throw internal_error("cell " + pair_text(tau, sigma) + " was never computed");
}

void KaLuTable::adopt(std::map<PairKey, Cell> cells, std::map<PairKey, PairKey> aliases) {
    cells_ = std::move(cells);
    aliases_ = std::move(aliases);
}

void KaLuTable::compute_pair(const CondVector& tau, const CondVector& sigma) {
    const PairKey key{tau, sigma};
    if (cells_.count(key) || aliases_.count(key)) return;
    if (!admissible_over(tau, sigma)) {
        const CondVector& reduced = reduction(tau, sigma);
        if (reduced != tau && !cells_.count({tau, reduced}))
            throw internal_error("reduced pair " + pair_text(tau, reduced) +
                                 " missing while aliasing " + pair_text(tau, sigma));
        aliases_.emplace(key, PairKey{tau, reduced});
        return;
    }
    const PosetContext& tc = tau_context(tau);
    CondVector rho;
    rho.reserve(tc.base.positions.size());
    for (int pos : tc.base.positions) rho.push_back(sigma[pos]);

    Cell c;
    c.m = area(lam(sigma)) - area(lam(tau));
    c.a = a_poly(tc, rho);
    c.r = c.a;
    for_box(tau, sigma, [&](const CondVector& eta) {
        if (eta == tau || eta == sigma) return;
        if (!admissible(eta)) return;
        if (!admissible_over(tau, eta)) return;
        c.r -= cell(tau, eta).g * cell(eta, sigma).b;
    });
    c.g = u_tilde(c.r, static_cast<int>(c.m));
    c.b = c.r - c.g;

    const long df = dim_f(tc, rho);
    const std::string at = " at " + pair_text(tau, sigma);
    if (c.a.is_zero() || c.a.degree() != 2 * df)
        throw internal_error("fiber polynomial degree differs from twice the fiber dimension" + at);
    if (c.b.coeff(0) != 1)
        throw internal_error("constant term of b is not 1" + at);
    if (!c.b.all_exponents_even() || !c.g.all_exponents_even())
        throw internal_error("odd exponent in b or g" + at);
    if (!c.b.all_coeffs_non_negative() || !c.g.all_coeffs_non_negative())
        throw internal_error("negative coefficient in b or g" + at);
    if (c.b.degree() >= c.m)
        throw internal_error("degree of b reaches the codimension" + at);
    if (!c.g.palindromic_about(static_cast<int>(c.m)))
        throw internal_error("g is not palindromic about the codimension" + at);
    if (!c.g.is_zero() && (c.g.min_exponent() < 2 * (c.m - df) || c.g.degree() > 2 * df))
        throw internal_error("support of g leaves the fiber window" + at);
    cells_.emplace(key, std::move(c));
}

void KaLuTable::extend_to(const CondVector& q) {
    const std::vector<CondVector> T = interval(ctx_, q);
    for (const CondVector& tau : T) cells_.emplace(PairKey{tau, tau}, unit_);
    // bucket comparable pairs by distance; each class only needs smaller ones
    std::map<long, std::vector<PairKey>> classes;
    for (const CondVector& tau : T) {
        for (const CondVector& sigma : T) {
            bool below = tau != sigma;
            for (size_t a = 0; below && a < tau.size(); ++a)
                if (tau[a] > sigma[a]) below = false;
            if (!below) continue;
            classes[distance(tau, sigma)].push_back({tau, sigma});
        }
    }
    for (auto& [mu, pairs] : classes) {
        if (order_ == PairOrder::reversed) std::reverse(pairs.begin(), pairs.end());
        for (const PairKey& pk : pairs) compute_pair(pk.first, pk.second);
    }
}

IntPoly kalu(const SchubertDatum& datum, const CondVector& p, const CondVector& q) {
    KaLuTable table(datum, p);
    const CondVector qb = adapt(table.context(), q);
    table.extend_to(qb);
    return table.cell(table.context().base.p_bar, qb).b;
}

SmallnessReport smallness(const SchubertDatum& datum, const CondVector& p) {
    const PosetContext ctx = make_context(datum, p);
    const auto iota = ctx.base_targets();
    const int nu = ctx.base.arity();
    SmallnessReport out;
    out.pi_small = out.xi_small = true;
    if (nu == 0) return out;
    const Partition lamp = lambda_of(ctx.sub, ctx.base.p_bar);
    auto lam_at = [&](int a) { return a < nu ? lamp[iota[a] - 1] : 0; };
    for (int a = 0; a < nu; ++a) {
        const int step = iota[a] - (a == 0 ? 0 : iota[a - 1]);
        const int drop = lam_at(a) - lam_at(a + 1);
        if (step > drop) {
            out.pi_small = false;
            out.pi_failing.push_back(a + 1);
        }
        if (step < drop) {
            out.xi_small = false;
            out.xi_failing.push_back(a + 1);
        }
    }
    return out;
}

DecompositionReport decompose(KaLuTable& table) {
    const PosetContext& ctx = table.context();
    const CondVector& pbar = ctx.base.p_bar;
    const CondVector qmax = max_admissible(ctx);
    table.extend_to(qmax);
    DecompositionReport report;
    report.datum = ctx.datum;
    report.dim = dim_grassmannian(ctx.datum.k, ctx.datum.l) - area(lambda_of(ctx.sub, pbar));
    for (const CondVector& sigma : interval(ctx, qmax)) {
        const Cell& c = table.cell(pbar, sigma);
        if (c.g.is_zero()) continue;
        DecompositionEntry entry;
        entry.q = sigma;
        entry.g = c.g;
        const long d = c.m - dim_f(ctx, sigma);
        const IntPoly f = shift_exponents(c.g, static_cast<int>(-2 * d));
        for (const auto& [e, count] : f.terms())
            entry.multiplicities.push_back({report.dim + e, count});
        report.entries.push_back(std::move(entry));
    }
    return report;
}

DecompositionReport decompose(const SchubertDatum& datum) {
    KaLuTable table(datum, CondVector(datum.arity(), 0));
    return decompose(table);
}

std::vector<ScanRow> scan_relevant(KaLuTable& table) {
    const PosetContext& ctx = table.context();
    const CondVector& pbar = ctx.base.p_bar;
    const CondVector qmax = max_admissible(ctx);
    table.extend_to(qmax);
    std::vector<ScanRow> rows;
    for (const CondVector& sigma : interval(ctx, qmax)) {
        if (sigma == pbar) continue;
        const Cell& c = table.cell(pbar, sigma);
        ScanRow row;
        row.q = sigma;
        row.m = c.m;
        row.dim_f = dim_f(ctx, sigma);
        row.relevant = row.m <= 2 * row.dim_f;
        row.g = c.g;
        row.silent = row.relevant && row.g.is_zero();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ScanRow> scan_relevant(const SchubertDatum& datum) {
    KaLuTable table(datum, CondVector(datum.arity(), 0));
    return scan_relevant(table);
}

VerifyReport verify_identities(const SchubertDatum& datum, const std::string& mode) {
    VerifyReport report;
    report.mode = mode;
    auto fail = [&](const std::string& msg) {
        if (report.failures.size() < 20) report.failures.push_back(msg);
    };
    const CondVector zero(datum.arity(), 0);
    if (mode == "pi-oracle" || mode == "xi-oracle") {
        const SmallnessReport sm = smallness(datum, zero);
        const bool want_pi = mode == "pi-oracle";
        if ((want_pi && !sm.pi_small) || (!want_pi && !sm.xi_small))
            throw validation_error(mode + " requires the matching small resolution for the base");
        KaLuTable table(datum, zero);
        const PosetContext& ctx = table.context();
        const CondVector qmax = max_admissible(ctx);
        table.extend_to(qmax);
        for (const CondVector& sigma : interval(ctx, qmax)) {
            const IntPoly expected = want_pi ? a_poly(ctx, sigma) : g_fiber_poly(ctx, sigma);
            ++report.checked;
            if (table.cell(ctx.base.p_bar, sigma).b != expected)
                fail("b differs from the fiber polynomial at " + to_text(sigma));
        }
    } else if (mode == "reconstruction") {
        KaLuTable table(datum, zero);
        const PosetContext& ctx = table.context();
        const CondVector qmax = max_admissible(ctx);
        table.extend_to(qmax);
        const std::vector<CondVector> all = interval(ctx, qmax);
        for (const auto& [key, c] : table.cells()) {
            const auto& [tau, sigma] = key;
            if (tau == sigma) continue;
            const PosetContext tc = make_context(ctx.sub, tau);
            CondVector rho;
            for (int pos : tc.base.positions) rho.push_back(sigma[pos]);
            IntPoly sum = c.b + c.g;
            for (const CondVector& eta : all) {
                bool between = eta != tau && eta != sigma;
                for (size_t a = 0; between && a < eta.size(); ++a)
                    if (eta[a] < tau[a] || eta[a] > sigma[a]) between = false;
                if (!between || !table.admissible_over(tau, eta)) continue;
                sum += table.cell(tau, eta).g * table.cell(eta, sigma).b;
            }
            ++report.checked;
            if (a_poly(tc, rho) != sum)
                fail("expansion of a disagrees at (" + to_text(tau) + ", " + to_text(sigma) + ")");
        }
    } else if (mode == "zelevinsky") {
        const SchubertDatum frame = make_context(datum, zero).sub;
        for (const CondVector& tau : enumerate_admissible(datum)) {
            const PosetContext tc = make_context(frame, tau);
            for (const CondVector& rho : interval(tc, max_admissible(tc))) {
                const FiberReport fr = fiber_report(tc, rho);  // throws if the split fails
                ++report.checked;
                if (fr.m != zelevinsky_codim(tc, rho))
                    fail("expanded codimension disagrees at (" + to_text(tau) + ", " +
                         to_text(rho) + ")");
            }
        }
    } else {
        throw validation_error("unknown verify mode: " + mode);
    }
    report.passed = report.failures.empty();
    return report;
}

}  // namespace kalu
