#pragma once

#include <vector>

#include "kalu/int_poly.hpp"
#include "kalu/lattice.hpp"

namespace kalu {

// Everything attached to one admissible pair (base of ctx, q).
struct FiberReport {
    IntPoly a;                 // Poincare polynomial of the flag-type fiber
    long dim_f = 0;            // its dimension
    IntPoly h_g;               // Poincare polynomial of the product-type fiber
    long dim_g = 0;            // its dimension
    long m = 0;                // codimension of Delta_q inside the base
    long b_form = 0;           // value of the quadratic form at q - p_bar
    std::vector<int> epsilon;  // q - p_bar
};

// Poincare polynomial of the fiber of the flag-variety resolution over the
// open cell of Delta_q: a product of Grassmannian-step factors. q is given
// over the frame of ctx and needs only containment; only its restriction to
// the base's positions enters.
IntPoly a_poly(const PosetContext& ctx, const CondVector& q);

// Dimension of that fiber.
long dim_f(const PosetContext& ctx, const CondVector& q);

// Poincare polynomial of the fiber of the product-of-Grassmannians
// resolution over the open cell of Delta_q, and its dimension.
IntPoly g_fiber_poly(const PosetContext& ctx, const CondVector& q);
long dim_g(const PosetContext& ctx, const CondVector& q);

// The positive-definite quadratic form on increment vectors:
// eps_nu^2 + sum_{a<nu} (eps_a^2 - eps_a eps_{a+1}); 0 for the empty vector.
long b_form(const std::vector<int>& eps);

// Codimension of Delta_q inside Delta_p, as the area difference of the
// diagrams. p and q live over the full frame of the datum.
long codim_between(const SchubertDatum& datum, const CondVector& p, const CondVector& q);

// The same codimension expanded along the base's essential positions:
// sum eps_a (iota_a - iota_{a-1} + lambda_{iota_a} - lambda_{iota_{a+1}})
// plus the quadratic form. Requires q admissible for ctx.
long zelevinsky_codim(const PosetContext& ctx, const CondVector& q);

// Full report; checks m = dim_f + dim_g + b_form and throws internal_error
// if the arithmetic disagrees.
FiberReport fiber_report(const PosetContext& ctx, const CondVector& q);

}  // namespace kalu
