#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "arcalg/tanisaki.hpp"

using namespace arcalg;

TEST_CASE("dual partitions") {
    CHECK(dual_partition({1, 1}) == std::vector<int>{2});
    CHECK(dual_partition({2, 2}) == std::vector<int>{2, 2});
    CHECK(dual_partition({3, 1}) == std::vector<int>{2, 1, 1});
    CHECK(dual_partition({1, 3}) == std::vector<int>{2, 1, 1});  // sorted first
    CHECK(dual_partition({3, 3}) == std::vector<int>{2, 2, 2});
}

TEST_CASE("generator sets for the small cases") {
    // mu = (1,1): e_1, e_2 of both variables only
    IdealBasis I = tanisaki_generators({1, 1});
    REQUIRE(I.gens.size() == 2);
    for (const auto& g : I.gens) {
        CHECK(g.k == 2);
        CHECK(g.subset == std::vector<int>{0, 1});
    }
    std::set<int> ls;
    for (const auto& g : I.gens) ls.insert(g.l);
    CHECK(ls == std::set<int>{1, 2});

    // mu = (2,2): e_1..e_4 of all four variables, e_2 and e_3 of every
    // 3-subset, and nothing with k <= 2.
    IdealBasis J = tanisaki_generators({2, 2});
    int k4 = 0, k3 = 0, k_small = 0;
    for (const auto& g : J.gens) {
        if (g.k == 4) ++k4;
        else if (g.k == 3) {
            ++k3;
            CHECK((g.l == 2 || g.l == 3));
        } else {
            ++k_small;
        }
    }
    CHECK(k4 == 4);
    CHECK(k3 == 8);  // 4 subsets x {e_2, e_3}
    CHECK(k_small == 0);
}

TEST_CASE("every generator is the advertised elementary symmetric function") {
    for (auto mu : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {1, 1, 1}}) {
        IdealBasis I = tanisaki_generators(mu);
        for (const auto& g : I.gens) {
            CHECK(g.poly == elementary_symmetric(I.N, g.subset, g.l));
            CHECK(g.poly.is_homogeneous());
            CHECK(g.poly.total_degree() == g.l);
        }
    }
}

TEST_CASE("graded quotient dimensions") {
    auto q11 = graded_quotient_dims(tanisaki_generators({1, 1}), 50);
    CHECK(q11.hilbert == std::vector<long>{1, 1});
    CHECK(q11.total == 2);
    CHECK(q11.top == 1);

    auto q22 = graded_quotient_dims(tanisaki_generators({2, 2}), 50);
    CHECK(q22.total == 6);
    CHECK(q22.top == 2);
    CHECK(q22.hilbert == std::vector<long>{1, 3, 2});
    CHECK(!q22.hilbert_symmetric);  // soft observation, recorded as-is

    auto q111 = graded_quotient_dims(tanisaki_generators({1, 1, 1}), 50);
    CHECK(q111.total == 6);  // coinvariant algebra of S_3
    CHECK(q111.top == 3);
    CHECK(q111.hilbert == std::vector<long>{1, 2, 2, 1});
    CHECK(q111.hilbert_symmetric);

    auto q33 = graded_quotient_dims(tanisaki_generators({3, 3}), 50);
    CHECK(q33.total == 20);
    CHECK(q33.top == 3);

    CHECK(expected_total({1, 1}) == 2);
    CHECK(expected_total({2, 2}) == 6);
    CHECK(expected_total({3, 3}) == 20);
    CHECK(expected_total({1, 1, 1}) == 6);
    CHECK(expected_total({3, 1}) == 4);
}

TEST_CASE("a too-small cutoff is reported") {
    CHECK_THROWS(graded_quotient_dims(tanisaki_generators({2, 2}), 1));
}

TEST_CASE("division certificates: specialization and homogeneity") {
    for (auto mu : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {1, 1, 1}}) {
        IdealBasis I = tanisaki_generators(mu);
        int N = I.N, r = static_cast<int>(mu.size());
        std::set<std::pair<int, int>> kls;
        for (const auto& g : I.gens) kls.insert({g.k, g.l});
        for (auto [k, l] : kls) {
            FPoly f = f_construction(k, l, mu);
            CHECK(f.poly.is_homogeneous());
            CHECK(f.poly.total_degree() == l);
            // property (1): all y_i = 0 recovers e_l(x_1..x_k)
            std::vector<int> first_k(k);
            for (int i = 0; i < k; ++i) first_k[i] = i;
            CHECK(f.poly.zero_out_from(N) ==
                  elementary_symmetric(N + r, first_k, l));
        }
    }
}

TEST_CASE("division certificates vanish on the patterned points") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> small(-6, 6);
    for (auto mu : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {1, 1, 1}, {3, 1}}) {
        IdealBasis I = tanisaki_generators(mu);
        int N = I.N, r = static_cast<int>(mu.size());
        std::set<std::pair<int, int>> kls;
        for (const auto& g : I.gens) kls.insert({g.k, g.l});
        for (auto [k, l] : kls) {
            FPoly f = f_construction(k, l, mu);
            for (int trial = 0; trial < 100; ++trial) {
                // choose a_1..a_r and a point b with mu_i coordinates = a_i
                std::vector<Rat> a(r);
                for (auto& x : a) x = small(rng);
                std::vector<Rat> b;
                for (int i = 0; i < r; ++i)
                    for (int c = 0; c < mu[i]; ++c) b.push_back(a[i]);
                std::shuffle(b.begin(), b.end(), rng);
                std::vector<Rat> point = b;
                point.insert(point.end(), a.begin(), a.end());
                REQUIRE(point.size() == static_cast<size_t>(N + r));
                CHECK(f.poly.eval(point) == 0);
            }
        }
    }
}
