#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kalu/fibers.hpp"

namespace kalu {

// One table entry for a pair (tau, sigma) over the base frame.
struct Cell {
    IntPoly a;  // fiber Poincare polynomial
    IntPoly r;  // a minus the already-settled lower terms
    IntPoly g;  // multiplicity polynomial: the symmetrized top of r
    IntPoly b;  // intersection-cohomology polynomial: the remainder
    long m = 0; // codimension of sigma's variety inside tau's

    friend bool operator==(const Cell&, const Cell&) = default;
};

using PairKey = std::pair<CondVector, CondVector>;

// Memoized table of the two-variable recursion over an interval of the
// admissible lattice. Pairs whose sigma is not expressible over tau's
// essential flag are aliases of their reduced pair; the alias shares the
// canonical cell.
class KaLuTable {
public:
    KaLuTable(const SchubertDatum& datum, const CondVector& p);

    const PosetContext& context() const { return ctx_; }

    // Processing order inside one distance class; the cells produced are
    // identical either way since a class depends only on smaller distances.
    enum class PairOrder { lex, reversed };
    void set_pair_order(PairOrder order) { order_ = order; }

    // Ensure every cell inside [p_bar, q] exists; q lives over the base frame.
    void extend_to(const CondVector& q);

    // Lookup over the base frame, resolving aliases; (tau, tau) is the unit.
    const Cell& cell(const CondVector& tau, const CondVector& sigma) const;

    const std::map<PairKey, Cell>& cells() const { return cells_; }
    const std::map<PairKey, PairKey>& aliases() const { return aliases_; }

    // Whether sigma's variety is expressible over tau's essential flag.
    bool admissible_over(const CondVector& tau, const CondVector& sigma);

    // Base-frame presentation of the variety cut out by sigma's conditions
    // at tau's essential positions; equals sigma iff admissible_over.
    const CondVector& reduction(const CondVector& tau, const CondVector& sigma);

    // Pre-populated cells from a stored dump; keys must match extend_to's.
    void adopt(std::map<PairKey, Cell> cells, std::map<PairKey, PairKey> aliases);

private:
    const PosetContext& tau_context(const CondVector& tau);
    const Partition& lam(const CondVector& v);
    bool admissible(const CondVector& v);
    void compute_pair(const CondVector& tau, const CondVector& sigma);

    PosetContext ctx_;
    PairOrder order_ = PairOrder::lex;
    std::map<CondVector, PosetContext> taus_;
    std::map<CondVector, Partition> lams_;
    std::map<CondVector, bool> adm_;
    std::map<PairKey, CondVector> reductions_;
    std::map<PairKey, Cell> cells_;
    std::map<PairKey, PairKey> aliases_;
    Cell unit_;
};

// b for the pair (p, q), both over the full frame of the datum; q need not
// be expressible over p's essential flag (the reduced pair has the same b).
IntPoly kalu(const SchubertDatum& datum, const CondVector& p, const CondVector& q);

struct SmallnessReport {
    bool pi_small = false;
    bool xi_small = false;
    std::vector<int> pi_failing;  // 1-based essential steps breaking pi-smallness
    std::vector<int> xi_failing;
};

// Smallness of the two resolutions of the variety named by (datum, p).
SmallnessReport smallness(const SchubertDatum& datum, const CondVector& p);

struct DecompositionEntry {
    CondVector q;
    IntPoly g;
    // (shift, count): the variety of q contributes `count` summands at the
    // given cohomological shift.
    std::vector<std::pair<long, Integer>> multiplicities;
};

struct DecompositionReport {
    SchubertDatum datum;
    long dim = 0;  // dimension of the base variety
    std::vector<DecompositionEntry> entries;
};

// Full decomposition of the pushforward for the base variety's flag-type
// resolution: every subvariety with a non-zero multiplicity polynomial.
DecompositionReport decompose(KaLuTable& table);
DecompositionReport decompose(const SchubertDatum& datum);

struct ScanRow {
    CondVector q;
    long m = 0;
    long dim_f = 0;
    bool relevant = false;
    IntPoly g;
    bool silent = false;
};

// Every admissible q != 0 with its relevance data. A subvariety is relevant
// when m <= 2 dim_f and silent when additionally its multiplicity vanishes.
std::vector<ScanRow> scan_relevant(KaLuTable& table);
std::vector<ScanRow> scan_relevant(const SchubertDatum& datum);

struct VerifyReport {
    std::string mode;
    bool passed = false;
    long checked = 0;
    std::vector<std::string> failures;
};

// Cross-checks one identity family on the base table of the datum:
//   pi-oracle       b equals the flag-fiber polynomial (pi small)
//   xi-oracle       b equals the product-fiber polynomial (xi small)
//   reconstruction  a re-expands from b, g over every computed pair
//   zelevinsky      codimension splits as dim_f + dim_g + quadratic form
VerifyReport verify_identities(const SchubertDatum& datum, const std::string& mode);

}  // namespace kalu
