#pragma once

#include <vector>

#include "kalu/schubert.hpp"

namespace kalu {

// A base subvariety fixed by its essential pair. Vectors handled through a
// context are offsets from sub.I, i.e. they live over the base's flag
// positions and keep the parent datum's coordinates.
struct PosetContext {
    SchubertDatum datum;  // the frame the context was built from
    EssentialPair base;   // essentialization of (datum, p)
    SchubertDatum sub;    // datum restricted to the base's positions

    std::vector<int> base_targets() const { return base.targets(); }
};

PosetContext make_context(const SchubertDatum& datum, const CondVector& p);

// Whether q (over the base's positions) denotes a subvariety of the base:
// offsets at least p_bar and the strengthened targets satisfy the weak
// conditions over the base's flag.
bool is_admissible(const PosetContext& ctx, const CondVector& q);

// Restriction of q (over the full frame of ctx.datum) to the base's
// positions. Requires containment of the named variety in the base;
// the result is always admissible.
CondVector adapt(const PosetContext& ctx, const CondVector& q);

// Containment Delta_q inside Delta_p, read off the diagrams.
bool leq(const SchubertDatum& datum, const CondVector& p, const CondVector& q);

// Sum of coordinate increments; requires p <= q componentwise.
long distance(const CondVector& p, const CondVector& q);

// All admissible tau with p_bar <= tau <= q componentwise, sorted by
// distance from p_bar, then lexicographically.
std::vector<CondVector> interval(const PosetContext& ctx, const CondVector& q);

// The componentwise-maximal admissible vector: every target saturated at k.
CondVector max_admissible(const PosetContext& ctx);

// Every admissible vector for the base variety itself (offsets over its
// essential positions), in interval order.
std::vector<CondVector> enumerate_admissible(const SchubertDatum& datum);

}  // namespace kalu
