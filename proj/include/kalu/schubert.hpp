#pragma once

#include <string>
#include <vector>

#include "kalu/errors.hpp"

namespace kalu {

// Offsets strengthening the incidence targets of a datum, one per condition.
using CondVector = std::vector<int>;

// Weakly decreasing k-tuple of column lengths, entries in [0, l-k].
using Partition = std::vector<int>;

// The Grassmannian G_k(C^l) together with incidence conditions
// dim(V ∩ F_{J[a]}) >= I[a] against a fixed flag F. Only the flag
// dimensions J matter; no coordinates are ever chosen.
struct SchubertDatum {
    int k = 0;
    int l = 0;
    std::vector<int> I;
    std::vector<int> J;

    int arity() const { return static_cast<int>(I.size()); }
    friend bool operator==(const SchubertDatum&, const SchubertDatum&) = default;
};

struct Violation {
    std::string name;
    std::string detail;
};

// Every violated constraint of the datum itself (the base variety, offsets
// all zero); empty when well formed. The ambient assumption k <= j_1 is
// enforced here.
std::vector<Violation> validate(const SchubertDatum& datum);

// Violations of the weak conditions for the strengthened targets I + p.
// An empty variety (some target above min{k, j_a}) reports, besides the
// failing inequality, a distinguished "empty" violation.
std::vector<Violation> validate_targets(const SchubertDatum& datum, const CondVector& p);

void require_valid(const SchubertDatum& datum);                          // throws validation_error
void require_valid_targets(const SchubertDatum& datum, const CondVector& p);

// The minimal subset of conditions cutting out the same subvariety.
// An empty position list means every condition was vacuous: the variety
// is the whole Grassmannian.
struct EssentialPair {
    std::vector<int> positions;  // 0-based indices into the parent's conditions, increasing
    std::vector<int> i_bar;      // parent I at those positions
    std::vector<int> j_bar;      // parent J at those positions
    std::vector<int> p_bar;      // surviving offsets

    int arity() const { return static_cast<int>(positions.size()); }
    bool full_grassmannian() const { return positions.empty(); }
    std::vector<int> targets() const;  // i_bar + p_bar

    friend bool operator==(const EssentialPair&, const EssentialPair&) = default;
};

// Deletes dominated, implied and vacuous conditions until the essential
// conditions hold. Preserves the variety: a trailing condition whose target
// equals k is kept (deleting it would enlarge the variety).
EssentialPair essentialize(const SchubertDatum& datum, const CondVector& p);

// Column lengths of the variety's diagram inside the k x (l-k) frame,
// computed from the essential pair.
Partition lambda_of(const SchubertDatum& datum, const CondVector& p);

long area(const Partition& lam);
long dim_grassmannian(int k, int l);  // k * (l - k)
long dim_variety(const SchubertDatum& datum, const CondVector& p);

// The unique offsets presenting the variety with diagram lam over the full
// flag of `frame`. Inverse of lambda_of for weak-condition presentations;
// throws internal_error when lam is not presentable over that flag.
CondVector presentation_over(const SchubertDatum& frame, const Partition& lam);

// Monospace rendering of lam inside its k x (l-k) frame.
std::string render_ferrers(const Partition& lam, int k, int l);

std::string to_text(const CondVector& v);  // "1,2,0"; "()" for the empty vector

}  // namespace kalu
