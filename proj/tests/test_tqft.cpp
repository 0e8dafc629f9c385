#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "arcalg/tqft.hpp"

using namespace arcalg;

namespace {

std::vector<Labeling> sorted(std::vector<Labeling> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("labeling weight counts X factors") {
    CHECK(labeling_weight(0, 3) == 0);
    CHECK(labeling_weight(0b101, 3) == 2);
    CHECK(labeling_weight(0b111, 3) == 3);
}

TEST_CASE("single-cup merge follows the dual-number product") {
    // m = 1: one cup, all three diagrams equal; W(a)a has one circle and the
    // surgery merges the two circles of the stacked picture into it.
    CupDiagram c = all_cup_diagrams(1)[0];
    CHECK(sorted(surgery_multiply(c, c, c, 0, 0)) == std::vector<Labeling>{0});  // 1*1=1
    CHECK(sorted(surgery_multiply(c, c, c, 1, 0)) == std::vector<Labeling>{1});  // X*1=X
    CHECK(sorted(surgery_multiply(c, c, c, 0, 1)) == std::vector<Labeling>{1});  // 1*X=X
    CHECK(surgery_multiply(c, c, c, 1, 1).empty());                              // X*X=0
}

TEST_CASE("a split produces the two-term coproduct") {
    // m = 2, nested middle against unnested outer diagrams forces one split.
    auto cups = all_cup_diagrams(2);
    auto unnested = CupDiagram::from_arcs(2, {{1, 2}, {3, 4}});
    auto nested = CupDiagram::from_arcs(2, {{1, 4}, {2, 3}});
    REQUIRE(std::count(cups.begin(), cups.end(), unnested) == 1);
    REQUIRE(std::count(cups.begin(), cups.end(), nested) == 1);

    // glue(unnested, unnested) has 2 circles; glue(unnested, nested) has 1.
    CHECK(glue(unnested, unnested).num_circles() == 2);
    CHECK(glue(unnested, nested).num_circles() == 1);

    // Pure merges: one output term labeled 1.
    CHECK(sorted(surgery_multiply(nested, nested, unnested, 0, 0)) ==
          std::vector<Labeling>{0});
    CHECK(sorted(surgery_multiply(unnested, nested, nested, 0, 0)) ==
          std::vector<Labeling>{0});

    // A genuine split: 1 comultiplies into X(x)1 + 1(x)X on the two circles
    // of glue(unnested, unnested).
    auto split = surgery_multiply(unnested, nested, unnested, 0, 0);
    CHECK(sorted(split) == std::vector<Labeling>{1, 2});  // X(x)1 + 1(x)X
}

TEST_CASE("surgery result is independent of the cup order") {
    std::mt19937 rng(12345);
    for (int n = 2; n <= 3; ++n) {
        auto cups = all_cup_diagrams(n);
        for (const auto& c : cups)
            for (const auto& b : cups)
                for (const auto& a : cups) {
                    int gc = glue(b, c).num_circles();
                    int fc = glue(a, b).num_circles();
                    std::vector<int> order(b.arcs.size());
                    std::iota(order.begin(), order.end(), 0);
                    for (Labeling g = 0; g < (Labeling{1} << gc); ++g)
                        for (Labeling f = 0; f < (Labeling{1} << fc); ++f) {
                            auto ref = sorted(surgery_multiply(c, b, a, g, f));
                            std::reverse(order.begin(), order.end());
                            CHECK(sorted(surgery_multiply(c, b, a, g, f, order)) == ref);
                            std::shuffle(order.begin(), order.end(), rng);
                            CHECK(sorted(surgery_multiply(c, b, a, g, f, order)) == ref);
                        }
                }
    }
}

TEST_CASE("term multiplicity is a power of two") {
    // Merges keep the term count, splits double it, and terms only vanish in
    // X*X pairs; starting from all-1 labels no term vanishes.
    auto cups = all_cup_diagrams(2);
    for (const auto& c : cups)
        for (const auto& b : cups)
            for (const auto& a : cups) {
                auto out = surgery_multiply(c, b, a, 0, 0);
                CHECK((out.size() & (out.size() - 1)) == 0);  // 0 or a power of 2
            }
}
