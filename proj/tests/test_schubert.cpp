#include <doctest.h>

#include "kalu/schubert.hpp"

#include "support.hpp"

using kalu::CondVector;
using kalu::EssentialPair;
using kalu::Partition;
using kalu::SchubertDatum;

namespace {

const SchubertDatum corners{5, 15, {1, 2, 3, 4}, {5, 7, 9, 11}};
const SchubertDatum wide{7, 20, {1, 3, 5}, {8, 12, 17}};
const SchubertDatum tall{10, 22, {2, 4, 6}, {11, 14, 17}};

bool has_violation(const SchubertDatum& d, const std::string& name) {
    for (const kalu::Violation& v : kalu::validate(d))
        if (v.name == name) return true;
    return false;
}

}  // namespace

TEST_CASE("validation of the defining datum") {
    CHECK(kalu::validate(corners).empty());
    CHECK(kalu::validate(wide).empty());
    CHECK(has_violation({0, 5, {1}, {3}}, "k_positive"));
    CHECK(has_violation({5, 5, {1}, {3}}, "k_below_l"));
    CHECK(has_violation({2, 6, {1, 2}, {3}}, "arity"));
    CHECK(has_violation({2, 6, {1, 1}, {4, 3}}, "j_increasing"));
    CHECK(has_violation({2, 6, {1, 1}, {3, 6}}, "j_below_l"));
    CHECK(has_violation({4, 8, {1}, {3}}, "k_le_j1"));
    CHECK(has_violation({2, 5, {3}, {4}}, "target_le_k"));
    CHECK(has_violation({3, 8, {-1, 2}, {4, 6}}, "target_non_negative"));
    CHECK(has_violation({3, 8, {2, 1}, {4, 6}}, "targets_monotone"));
    CHECK(has_violation({3, 8, {1, 3}, {4, 5}}, "target_gaps"));
    CHECK(has_violation({4, 6, {1}, {5}}, "tail"));
}

TEST_CASE("validation of strengthened targets") {
    CHECK(kalu::validate_targets(corners, {1, 2, 1, 1}).empty());
    CHECK(!kalu::validate_targets(corners, {1, 2, 1}).empty());       // arity
    CHECK(!kalu::validate_targets(corners, {-1, 0, 0, 0}).empty());   // negative
    CHECK(!kalu::validate_targets(corners, {5, 3, 2, 1}).empty());    // exceeds k
    CHECK_THROWS_AS(kalu::require_valid_targets(corners, {0, 3, 0, 0}),
                    kalu::validation_error);  // targets not monotone
    // all targets saturated at k: the point variety, still well formed
    CHECK_NOTHROW(kalu::require_valid_targets(corners, {4, 3, 2, 1}));
}

TEST_CASE("essential pair of the base and of subvarieties") {
    const EssentialPair base = kalu::essentialize(corners, {0, 0, 0, 0});
    CHECK(base.positions == std::vector<int>{0, 1, 2, 3});
    CHECK(base.p_bar == std::vector<int>{0, 0, 0, 0});

    // two of the four strengthened conditions become redundant
    const EssentialPair q = kalu::essentialize(corners, {1, 2, 1, 1});
    CHECK(q.positions == std::vector<int>{1, 3});
    CHECK(q.i_bar == std::vector<int>{2, 4});
    CHECK(q.j_bar == std::vector<int>{7, 11});
    CHECK(q.p_bar == std::vector<int>{2, 1});
    CHECK(q.targets() == std::vector<int>{4, 5});

    // a single surviving condition, and an incomparable two-condition one
    const EssentialPair p1 = kalu::essentialize(wide, {1, 3, 1});
    CHECK(p1.positions == std::vector<int>{1});
    CHECK(p1.targets() == std::vector<int>{6});
    const EssentialPair q1 = kalu::essentialize(wide, {3, 1, 1});
    CHECK(q1.positions == std::vector<int>{0, 2});
    CHECK(q1.targets() == std::vector<int>{4, 6});

    // a condition weaker than the ambient dimension disappears entirely
    const EssentialPair none = kalu::essentialize({2, 6, {1}, {5}}, {0});
    CHECK(none.full_grassmannian());

    // a trailing target equal to k survives: dropping it would change the variety
    CHECK(kalu::essentialize(corners, {1, 2, 1, 1}).targets().back() == 5);
}

TEST_CASE("essentialization is idempotent and preserves the diagram") {
    const std::vector<std::pair<SchubertDatum, CondVector>> cases = {
        {corners, {1, 2, 1, 1}}, {corners, {1, 1, 1, 1}}, {wide, {1, 3, 1}},
        {wide, {3, 1, 1}},       {wide, {2, 3, 1}},       {tall, {1, 2, 0}},
        {tall, {4, 3, 1}},       {tall, {2, 3, 2}},
    };
    for (const auto& [d, p] : cases) {
        const EssentialPair e = kalu::essentialize(d, p);
        const SchubertDatum sub{d.k, d.l, e.i_bar, e.j_bar};
        CHECK(kalu::essentialize(sub, e.p_bar).positions ==
              [&] {
                  std::vector<int> all(e.positions.size());
                  for (size_t a = 0; a < all.size(); ++a) all[a] = static_cast<int>(a);
                  return all;
              }());
        CHECK(kalu::lambda_of(sub, e.p_bar) == kalu::lambda_of(d, p));
    }
}

TEST_CASE("column lengths of the diagram") {
    CHECK(kalu::lambda_of(corners, {0, 0, 0, 0}) == Partition{6, 5, 4, 3, 0});
    CHECK(kalu::lambda_of(corners, {1, 1, 1, 1}) == Partition{7, 7, 6, 5, 4});
    CHECK(kalu::lambda_of(corners, {1, 2, 1, 1}) == Partition{7, 7, 7, 7, 4});
    CHECK(kalu::lambda_of(wide, {0, 0, 0}) == Partition{6, 4, 4, 1, 1, 0, 0});
    CHECK(kalu::lambda_of(wide, {2, 3, 1}) == Partition{8, 8, 8, 7, 7, 7, 0});
    CHECK(kalu::lambda_of(tall, {2, 3, 1}) == Partition{5, 5, 5, 5, 5, 5, 5, 0, 0, 0});
}

TEST_CASE("dimension bookkeeping") {
    CHECK(kalu::dim_grassmannian(5, 15) == 50);
    CHECK(kalu::area(Partition{6, 5, 4, 3, 0}) == 18);
    CHECK(kalu::dim_variety(corners, {0, 0, 0, 0}) == 32);
    CHECK(kalu::dim_variety(corners, {1, 2, 1, 1}) == 18);
    CHECK(kalu::dim_variety(wide, {0, 0, 0}) == 91 - 16);
}

TEST_CASE("unique presentation over a fixed flag") {
    // the weak presentation of a subvariety over the full flag is recovered
    // exactly from its diagram
    const std::vector<std::pair<SchubertDatum, CondVector>> cases = {
        {corners, {1, 2, 1, 1}}, {corners, {0, 0, 0, 0}}, {wide, {2, 3, 1}},
        {wide, {3, 1, 1}},       {tall, {2, 3, 1}},
    };
    for (const auto& [d, p] : cases)
        CHECK(kalu::presentation_over(d, kalu::lambda_of(d, p)) == p);

    // distinct weak presentations name distinct varieties
    CHECK(kalu::lambda_of(tall, {4, 3, 1}) != kalu::lambda_of(tall, {2, 3, 1}));
    CHECK(kalu::lambda_of(tall, {4, 3, 1}) != kalu::lambda_of(tall, {2, 3, 2}));
    CHECK(kalu::presentation_over(tall, kalu::lambda_of(tall, {4, 3, 1})) == CondVector{4, 3, 1});
}

TEST_CASE("every weak presentation round-trips over its own flag") {
    for (const SchubertDatum& d : support::essential_data(2, 8)) {
        CHECK(kalu::presentation_over(d, kalu::lambda_of(d, CondVector(d.I.size(), 0))) ==
              CondVector(d.I.size(), 0));
    }
}

TEST_CASE("diagram rendering") {
    CHECK(kalu::render_ferrers({2, 1, 0}, 3, 8) == "+-----+\n"
                                                   "|##   |\n"
                                                   "|#    |\n"
                                                   "|     |\n"
                                                   "+-----+");
    CHECK(kalu::render_ferrers({7, 7, 7, 7, 4}, 5, 15) == "+----------+\n"
                                                          "|#######   |\n"
                                                          "|#######   |\n"
                                                          "|#######   |\n"
                                                          "|#######   |\n"
                                                          "|####      |\n"
                                                          "+----------+");
}

TEST_CASE("vector rendering") {
    CHECK(kalu::to_text(CondVector{1, 2, 0}) == "1,2,0");
    CHECK(kalu::to_text(CondVector{}) == "()");
}
