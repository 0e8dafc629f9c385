#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcalg/colored_algebra.hpp"

using namespace arcalg;

TEST_CASE("block dimensions for n=1") {
    KAlgebra K(1);
    REQUIRE(K.seqs().size() == 2);
    CHECK(K.seqs()[0].str() == "-+");
    CHECK(K.seqs()[1].str() == "+-");
    CHECK(K.block_dim(0, 0) == 2);  // R (x) C
    CHECK(K.block_dim(0, 1) == 1);
    CHECK(K.block_dim(1, 0) == 1);
    CHECK(K.block_dim(1, 1) == 1);
    CHECK(K.dim() == 5);
}

TEST_CASE("the n=1 multiplication table") {
    KAlgebra K(1);
    const int a = 0, b = 1;
    auto one = [&](int t, int bo) { return K.index(t, bo, 0); };
    int Xaa = K.index(a, a, 1);  // X (x) 1 in the (a,a) block

    // left multiplication by the (a,a) block into the (a,b) column
    CHECK(K.mult_basis(one(a, a), one(a, b)) == SparseVec{{one(a, b), Rat(1)}});
    CHECK(K.mult_basis(Xaa, one(a, b)).empty());
    // composite through the thin blocks
    CHECK(K.mult_basis(one(b, a), one(a, b)).empty());
    CHECK(K.mult_basis(one(a, b), one(b, a)) == SparseVec{{Xaa, Rat(1)}});
    // unit-like actions
    CHECK(K.mult_basis(one(a, b), one(b, b)) == SparseVec{{one(a, b), Rat(1)}});
    CHECK(K.mult_basis(one(b, a), one(a, a)) == SparseVec{{one(b, a), Rat(1)}});
    CHECK(K.mult_basis(one(b, a), Xaa).empty());
    CHECK(K.mult_basis(one(b, b), one(b, a)) == SparseVec{{one(b, a), Rat(1)}});
    // inside the (a,a) block
    CHECK(K.mult_basis(one(a, a), one(a, a)) == SparseVec{{one(a, a), Rat(1)}});
    CHECK(K.mult_basis(one(a, a), Xaa) == SparseVec{{Xaa, Rat(1)}});
    CHECK(K.mult_basis(Xaa, Xaa).empty());
}

TEST_CASE("degrees for n=1 are 0,2,1,1,0") {
    KAlgebra K(1);
    const int want[] = {0, 2, 1, 1, 0};
    for (int i = 0; i < 5; ++i) CHECK(K.degree(i) == want[i]);
}

TEST_CASE("zero blocks appear exactly where a red circle does") {
    for (int n = 1; n <= 3; ++n) {
        KAlgebra K(n);
        int nseq = static_cast<int>(K.seqs().size());
        for (int t = 0; t < nseq; ++t)
            for (int b = 0; b < nseq; ++b) {
                const GluedDiagram& g = K.glued(t, b);
                if (g.red > 0) CHECK(K.block_dim(t, b) == 0);
                else CHECK(K.block_dim(t, b) == 1 << g.black);
            }
    }
}

TEST_CASE("index / decode round trip including zero blocks") {
    for (int n = 1; n <= 2; ++n) {
        KAlgebra K(n);
        for (int i = 0; i < K.dim(); ++i) {
            KBasisElt e = K.decode(i);
            CHECK(K.block_dim(e.top, e.bottom) > 0);
            CHECK(K.index(e.top, e.bottom, e.f) == i);
        }
    }
}

TEST_CASE("unit and idempotents") {
    for (int n = 1; n <= 2; ++n) {
        KAlgebra K(n);
        SparseVec one = K.unit();
        for (int i = 0; i < K.dim(); ++i) {
            SparseVec v{{i, Rat(1)}};
            CHECK(K.mult(one, v) == v);
            CHECK(K.mult(v, one) == v);
        }
        int nseq = static_cast<int>(K.seqs().size());
        for (int a = 0; a < nseq; ++a)
            for (int b = 0; b < nseq; ++b) {
                SparseVec prod = K.mult(K.idempotent(a), K.idempotent(b));
                if (a == b) CHECK(prod == K.idempotent(a));
                else CHECK(prod.empty());
            }
    }
}

TEST_CASE("multiplication is associative (exhaustive, n=2)") {
    KAlgebra K(2);
    for (int i = 0; i < K.dim(); ++i)
        for (int j = 0; j < K.dim(); ++j) {
            const SparseVec& ij = K.mult_basis(i, j);
            for (int k = 0; k < K.dim(); ++k) {
                SparseVec left = K.mult(ij, SparseVec{{k, Rat(1)}});
                SparseVec right = K.mult(SparseVec{{i, Rat(1)}}, K.mult_basis(j, k));
                CHECK(left == right);
            }
        }
}

TEST_CASE("multiplication is associative (random triples, n=3)") {
    KAlgebra K(3);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(K.dim()) - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        int i = pick(rng), j = pick(rng), k = pick(rng);
        SparseVec left = K.mult(K.mult_basis(i, j), SparseVec{{k, Rat(1)}});
        SparseVec right = K.mult(SparseVec{{i, Rat(1)}}, K.mult_basis(j, k));
        CHECK(left == right);
    }
}

TEST_CASE("the grading is additive on products (exhaustive, n <= 2)") {
    for (int n = 1; n <= 2; ++n) {
        KAlgebra K(n);
        for (int i = 0; i < K.dim(); ++i)
            for (int j = 0; j < K.dim(); ++j)
                for (const auto& [k, c] : K.mult_basis(i, j))
                    CHECK(K.degree(k) == K.degree(i) + K.degree(j));
    }
}

TEST_CASE("x_alpha places X on black circles only") {
    KAlgebra K(1);
    // point 2 (inner) lies on the black circle of the (a,a) block
    SparseVec v = K.x_alpha(0, 0, HalfIndex::from_pos(2, 1));
    CHECK(v == SparseVec{{K.index(0, 0, 1), Rat(1)}});
    // point 1 (outer) lies on the green circle: zero
    CHECK(K.x_alpha(0, 0, HalfIndex::from_pos(1, 1)).empty());
}

TEST_CASE("the componentwise product is commutative and nilpotent") {
    KAlgebra K(2);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(K.dim()) - 1);
    for (int trial = 0; trial < 200; ++trial) {
        SparseVec x{{pick(rng), Rat(1)}}, y{{pick(rng), Rat(1)}};
        CHECK(K.star(x, y) == K.star(y, x));
        KBasisElt e = K.decode(x.begin()->first);
        if (e.f != 0) CHECK(K.star(x, x).empty());  // X * X = 0 componentwise
    }
}
