#include <doctest.h>

#include <set>

#include "kalu/engine.hpp"

#include "support.hpp"

using kalu::Cell;
using kalu::CondVector;
using kalu::IntPoly;
using kalu::KaLuTable;
using kalu::SchubertDatum;

namespace {

const SchubertDatum small_datum{3, 8, {1, 2}, {4, 6}};
const SchubertDatum pair_datum{5, 11, {3, 4}, {6, 8}};
const SchubertDatum triple_datum{6, 13, {3, 4, 5}, {7, 9, 11}};
const SchubertDatum wide{7, 20, {1, 3, 5}, {8, 12, 17}};

IntPoly from_coeffs(std::initializer_list<std::pair<int, int>> terms) {
    IntPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

std::set<CondVector> silent_set(const SchubertDatum& d) {
    std::set<CondVector> out;
    for (const kalu::ScanRow& row : kalu::scan_relevant(d))
        if (row.silent) out.insert(row.q);
    return out;
}

}  // namespace

TEST_CASE("hand-checked cells of the smallest singular base") {
    KaLuTable table(small_datum, {0, 0});
    table.extend_to({2, 1});

    const Cell& first = table.cell({0, 0}, {1, 0});
    CHECK(first.a == from_coeffs({{0, 1}, {2, 1}}));
    CHECK(first.r == first.a);
    CHECK(first.g.is_zero());
    CHECK(first.b == first.a);
    CHECK(first.m == 3);

    // the recursion never reaches the truncation window on this datum,
    // so every b equals its a
    const Cell& mid = table.cell({0, 0}, {1, 1});
    CHECK(mid.b == from_coeffs({{0, 1}, {2, 2}, {4, 1}}));
    CHECK(mid.m == 5);
    const Cell& top = table.cell({0, 0}, {2, 1});
    CHECK(top.b == from_coeffs({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
    CHECK(top.m == 9);
    CHECK(kalu::kalu(small_datum, {0, 0}, {2, 1}) == top.b);

    // the diagonal is the unit: one copy of the stratum's own sheaf
    const Cell& unit = table.cell({1, 1}, {1, 1});
    CHECK(unit.b == IntPoly::constant(1));
    CHECK(unit.g == IntPoly::constant(1));
    CHECK(unit.m == 0);

    CHECK_THROWS_AS(table.cell({0, 1}, {2, 0}), kalu::internal_error);
}

TEST_CASE("lookups demand a prior extension") {
    KaLuTable table(small_datum, {0, 0});
    CHECK_THROWS_AS(table.cell({0, 0}, {1, 0}), kalu::internal_error);
    table.extend_to({1, 0});
    CHECK(table.cell({0, 0}, {1, 0}).m == 3);
}

TEST_CASE("pairs reduce when sigma is not expressible over tau's flag") {
    // the conditions of (1,1) restricted to the flag of (1,0) cut out the
    // base itself
    CHECK(kalu::kalu(small_datum, {1, 0}, {1, 1}) == IntPoly::constant(1));

    KaLuTable table(wide, {0, 0, 0});
    table.extend_to({2, 3, 1});
    CHECK(table.admissible_over({0, 0, 0}, {2, 3, 1}));
    CHECK_FALSE(table.admissible_over({0, 2, 0}, {2, 3, 1}));
    CHECK(table.reduction({0, 2, 0}, {2, 3, 1}) == CondVector{1, 3, 1});
    CHECK(table.cell({0, 2, 0}, {2, 3, 1}) == table.cell({0, 2, 0}, {1, 3, 1}));
    const kalu::PairKey from{{0, 2, 0}, {2, 3, 1}};
    const kalu::PairKey to{{0, 2, 0}, {1, 3, 1}};
    REQUIRE(table.aliases().count(from) == 1);
    CHECK(table.aliases().at(from) == to);
    CHECK(table.cells().count(from) == 0);

    // the reduced pair is a single Grassmannian step, so its b is closed-form
    CHECK(table.cell({0, 2, 0}, {2, 3, 1}).b == kalu::gauss_poincare(5, 6));
    CHECK(table.cell({0, 2, 0}, {2, 3, 1}).m == 12);
    CHECK(kalu::kalu(wide, {0, 2, 0}, {2, 3, 1}) == kalu::gauss_poincare(5, 6));
}

TEST_CASE("cells are intrinsic to the pair") {
    KaLuTable table(small_datum, {0, 0});
    table.extend_to({2, 1});
    for (const auto& [key, cell] : table.cells()) {
        if (key.first == CondVector{0, 0}) continue;  // fresh table is the same table
        CHECK(kalu::kalu(small_datum, key.first, key.second) == cell.b);
    }
}

TEST_CASE("processing order inside a distance class does not matter") {
    KaLuTable lex(triple_datum, {0, 0, 0});
    lex.extend_to({3, 2, 1});
    KaLuTable rev(triple_datum, {0, 0, 0});
    rev.set_pair_order(KaLuTable::PairOrder::reversed);
    rev.extend_to({3, 2, 1});
    CHECK(lex.cells() == rev.cells());
    CHECK(lex.aliases() == rev.aliases());
}

TEST_CASE("smallness of the two resolutions") {
    const auto both = kalu::smallness(small_datum, {0, 0});
    CHECK(both.pi_small);
    CHECK(both.xi_small);
    CHECK(both.pi_failing.empty());
    CHECK(both.xi_failing.empty());

    const auto pi_only = kalu::smallness({3, 9, {1, 2}, {4, 6}}, {0, 0});
    CHECK(pi_only.pi_small);
    CHECK_FALSE(pi_only.xi_small);
    CHECK_FALSE(pi_only.xi_failing.empty());

    const auto xi_only = kalu::smallness({4, 10, {1, 3}, {5, 8}}, {0, 0});
    CHECK_FALSE(xi_only.pi_small);
    CHECK(xi_only.xi_small);

    const auto neither = kalu::smallness({4, 10, {2, 3}, {5, 7}}, {0, 0});
    CHECK_FALSE(neither.pi_small);
    CHECK_FALSE(neither.xi_small);
    CHECK_FALSE(neither.pi_failing.empty());
    CHECK_FALSE(neither.xi_failing.empty());

    // a strengthened base has its own essential pair and its own answer
    const auto up = kalu::smallness(small_datum, {1, 0});
    CHECK(up.pi_small);
    CHECK_FALSE(up.xi_small);
    CHECK(up.xi_failing == std::vector<int>{1});
}

TEST_CASE("relevance scan") {
    const std::vector<kalu::ScanRow> rows = kalu::scan_relevant(pair_datum);
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].q == CondVector{0, 1});
    CHECK(rows[0].m == 4);
    CHECK(rows[0].dim_f == 1);
    CHECK_FALSE(rows[0].relevant);
    CHECK_FALSE(rows[0].silent);

    CHECK(rows[1].q == CondVector{1, 0});
    CHECK(rows[1].m == 5);
    CHECK(rows[1].dim_f == 3);
    CHECK(rows[1].relevant);
    CHECK(rows[1].g == from_coeffs({{4, 1}, {6, 1}}));
    CHECK_FALSE(rows[1].silent);

    CHECK(rows[2].q == CondVector{1, 1});
    CHECK(rows[2].m == 8);
    CHECK(rows[2].dim_f == 4);
    CHECK(rows[2].g == from_coeffs({{8, 1}}));

    CHECK(rows[3].q == CondVector{2, 1});
    CHECK(rows[3].m == 14);
    CHECK(rows[3].dim_f == 7);
    CHECK(rows[3].relevant);
    CHECK(rows[3].g.is_zero());
    CHECK(rows[3].silent);
}

TEST_CASE("silent subvarieties of the two smallest listed data") {
    CHECK(silent_set(pair_datum) == std::set<CondVector>{{2, 1}});
    CHECK(silent_set(triple_datum) ==
          std::set<CondVector>{{1, 0, 1}, {1, 2, 1}, {3, 2, 1}});
}

TEST_CASE("decomposition report") {
    const kalu::DecompositionReport rep = kalu::decompose(pair_datum);
    CHECK(rep.datum == pair_datum);
    CHECK(rep.dim == 19);
    REQUIRE(rep.entries.size() == 3);

    CHECK(rep.entries[0].q == CondVector{0, 0});
    CHECK(rep.entries[0].g == IntPoly::constant(1));
    CHECK(rep.entries[0].multiplicities ==
          std::vector<std::pair<long, kalu::Integer>>{{19, 1}});

    CHECK(rep.entries[1].q == CondVector{1, 0});
    CHECK(rep.entries[1].g == from_coeffs({{4, 1}, {6, 1}}));
    CHECK(rep.entries[1].multiplicities ==
          std::vector<std::pair<long, kalu::Integer>>{{19, 1}, {21, 1}});

    CHECK(rep.entries[2].q == CondVector{1, 1});
    CHECK(rep.entries[2].multiplicities ==
          std::vector<std::pair<long, kalu::Integer>>{{19, 1}});

    // both resolutions of the fully small datum are semismall, so only the
    // base contributes
    const kalu::DecompositionReport lone = kalu::decompose(small_datum);
    CHECK(lone.dim == 12);
    REQUIRE(lone.entries.size() == 1);
    CHECK(lone.entries[0].q == CondVector{0, 0});
    CHECK(lone.entries[0].multiplicities ==
          std::vector<std::pair<long, kalu::Integer>>{{12, 1}});

    // the table overload reuses an existing table
    KaLuTable table(pair_datum, {0, 0});
    const kalu::DecompositionReport again = kalu::decompose(table);
    REQUIRE(again.entries.size() == rep.entries.size());
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        CHECK(again.entries[i].q == rep.entries[i].q);
        CHECK(again.entries[i].g == rep.entries[i].g);
        CHECK(again.entries[i].multiplicities == rep.entries[i].multiplicities);
    }
}

TEST_CASE("identity checks") {
    const auto recon = kalu::verify_identities(triple_datum, "reconstruction");
    CHECK(recon.passed);
    CHECK(recon.checked == 34);
    CHECK(recon.failures.empty());

    const auto pi = kalu::verify_identities({3, 9, {1, 2}, {4, 6}}, "pi-oracle");
    CHECK(pi.passed);
    CHECK(pi.checked == 5);

    const auto xi = kalu::verify_identities({4, 10, {1, 3}, {5, 8}}, "xi-oracle");
    CHECK(xi.passed);
    CHECK(xi.checked == 7);

    const auto zel = kalu::verify_identities(small_datum, "zelevinsky");
    CHECK(zel.passed);
    CHECK(zel.checked == 11);

    // the oracles refuse bases whose matching resolution is not small
    CHECK_THROWS_AS(kalu::verify_identities({4, 10, {2, 3}, {5, 7}}, "pi-oracle"),
                    kalu::validation_error);
    CHECK_THROWS_AS(kalu::verify_identities({3, 9, {1, 2}, {4, 6}}, "xi-oracle"),
                    kalu::validation_error);
    CHECK_THROWS_AS(kalu::verify_identities(small_datum, "everything"),
                    kalu::validation_error);
}

TEST_CASE("input rejection") {
    CHECK_THROWS_AS(kalu::kalu(small_datum, {1, 0}, {0, 1}), kalu::validation_error);
    CHECK_THROWS_AS(kalu::kalu({3, 8, {2, 1}, {4, 6}}, {0, 0}, {0, 0}),
                    kalu::validation_error);
    CHECK_THROWS_AS(kalu::kalu(small_datum, {0, 0}, {0, 0, 0}), kalu::validation_error);
}

TEST_CASE("structure of every computed cell") {
    std::mt19937_64 rng(20240818);
    const std::vector<SchubertDatum> pool = support::essential_data(3, 10);
    for (int trial = 0; trial < 12; ++trial) {
        const SchubertDatum d = support::pick(rng, pool);
        KaLuTable table(d, CondVector(d.I.size(), 0));
        table.extend_to(kalu::max_admissible(table.context()));
        for (const auto& [key, cell] : table.cells()) {
            CHECK(cell.b.coeff(0) == 1);
            CHECK(cell.b.all_exponents_even());
            CHECK(cell.b.all_coeffs_non_negative());
            if (key.first != key.second) CHECK(cell.b.degree() < cell.m);
            if (!cell.g.is_zero()) {
                CHECK(cell.g.palindromic_about(cell.m));
                CHECK(cell.g.all_exponents_even());
                CHECK(cell.g.all_coeffs_non_negative());
            }
        }
    }
}
