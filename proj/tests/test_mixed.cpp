#include "cyclo/chain.hpp"
#include "cyclo/constructions.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/mixed.hpp"

#include <doctest.h>

#include <random>

using namespace cyclo;

namespace {

int total_dim(const Mixed& m, int n) {
    int d = 0;
    for (int w : m->weights()) d += m->dim(n, w);
    return d;
}

} // namespace

TEST_CASE("bar complex dimensions") {
    SUBCASE("ground field is a point") {
        Mixed m = bar_mixed(rationals(), 6, 0);
        CHECK(m->dim(0, 0) == 1);
        for (int n = 1; n <= 6; ++n) CHECK(m->dim(n, 0) == 0);
        CHECK(m->boundary(1, 0).is_zero());
        CHECK(m->connes(0, 0).is_zero());
    }

    SUBCASE("graded dual numbers: two chains in every degree") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        Mixed m = bar_mixed(xi, 4, 5);
        for (int n = 0; n <= 4; ++n) CHECK(total_dim(m, n) == 2);
        // weight pieces: 1 (x) xi^(x)n at weight n, xi (x) xi^(x)n at weight n+1
        CHECK(m->dim(2, 2) == 1);
        CHECK(m->dim(2, 3) == 1);
        CHECK(m->dim(2, 1) == 0);
        // the weight window cuts the top piece
        Mixed cut = bar_mixed(xi, 4, 4);
        CHECK(total_dim(cut, 4) == 1);
    }

    SUBCASE("ungraded dimensions follow dim A * (dim Abar)^n") {
        for (const char* key : {"dual", "kxk", "x3", "m2"}) {
            AlgebraPtr a = catalog_algebra(key);
            Mixed m = bar_mixed(a, 5, 0);
            int abar = a->dim() - 1;
            long expect = a->dim();
            for (int n = 0; n <= 5; ++n) {
                CHECK(m->dim(n, 0) == expect);
                expect *= abar;
            }
        }
    }
}

TEST_CASE("mixed relations hold across the catalog") {
    for (const auto& e : standard_library()) {
        int w = std::min(4, bar_weight_cap(*e.algebra));
        Mixed m = bar_mixed(e.algebra, 5, w);
        CHECK(check_mixed_relations(m, 5, w).empty());
    }
}

TEST_CASE("de Rham models") {
    SUBCASE("polynomial line") {
        Mixed m = de_rham_model(DeRhamKind::Poly, 4);
        CHECK(m->dim(0, 0) == 1);
        CHECK(m->dim(1, 0) == 0);
        CHECK(m->dim(0, 3) == 1);
        CHECK(m->dim(1, 3) == 1);
        CHECK(m->connes(0, 3).get(0, 0) == Rat(3));
        CHECK(check_mixed_relations(m, 8, 4).empty());
    }
    SUBCASE("Laurent line keeps t^-1 dt out of the image of B") {
        Mixed m = de_rham_model(DeRhamKind::Laurent, 3);
        CHECK(m->dim(0, -2) == 1);
        CHECK(m->dim(1, 0) == 1);       // t^-1 dt
        CHECK(m->connes(0, 0).is_zero()); // B(1) = 0: the class survives
        CHECK(m->connes(0, -2).get(0, 0) == Rat(-2));
        CHECK(check_mixed_relations(m, 8, 3).empty());
    }
}

TEST_CASE("tensor of mixed complexes") {
    SUBCASE("unit object") {
        Mixed unit = bar_mixed(rationals(), 8, 0);
        AlgebraPtr kk = catalog_algebra("kxk");
        Mixed m = bar_mixed(kk, 5, 0);
        Mixed t = tensor_mixed(unit, m);
        for (int n = 0; n <= 5; ++n) {
            CHECK(t->dim(n, 0) == m->dim(n, 0));
            if (n >= 1) CHECK(t->boundary(n, 0) == m->boundary(n, 0));
            if (n < 5) CHECK(t->connes(n, 0) == m->connes(n, 0));
        }
    }

    SUBCASE("dimensions satisfy the Cauchy product rule") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        Mixed a = bar_mixed(xi, 4, 3);
        Mixed b = de_rham_model(DeRhamKind::Poly, 3);
        Mixed t = tensor_mixed(a, b);
        for (int n = 0; n <= 4; ++n)
            for (int w = 0; w <= 3; ++w) {
                int expect = 0;
                for (int i = 0; i <= n; ++i)
                    for (int u = 0; u <= w; ++u) expect += a->dim(i, u) * b->dim(n - i, w - u);
                CHECK(t->dim(n, w) == expect);
            }
    }

    SUBCASE("relations are preserved") {
        AlgebraPtr dual = catalog_algebra("dual");
        Mixed t = tensor_mixed(bar_mixed(dual, 5, 0), de_rham_model(DeRhamKind::Laurent, 2));
        CHECK(check_mixed_relations(t, 5, 2).empty());
        Mixed tt = tensor_mixed(de_rham_model(DeRhamKind::Poly, 2),
                                de_rham_model(DeRhamKind::Laurent, 2));
        CHECK(check_mixed_relations(tt, 6, 2).empty());
    }
}

TEST_CASE("suspension shifts and flips") {
    AlgebraPtr kk = catalog_algebra("kxk");
    Mixed m = bar_mixed(kk, 4, 0);
    Mixed s = suspend(m);
    CHECK(s->dim(0, 0) == 0);
    for (int n = 0; n <= 4; ++n) CHECK(s->dim(n + 1, 0) == m->dim(n, 0));
    CHECK(s->boundary(2, 0) == -m->boundary(1, 0));
    CHECK(s->connes(2, 0) == -m->connes(1, 0));
    CHECK(check_mixed_relations(s, 5, 0).empty());
}

TEST_CASE("cones") {
    SUBCASE("cone of the identity is acyclic") {
        AlgebraPtr dual = catalog_algebra("dual");
        ChainComplex c = underlying_complex(bar_mixed(dual, 5, 0), 5);
        ChainMap id{c, c, {}};
        for (int n = 0; n <= 5; ++n) {
            SparseMatrix m = SparseMatrix::identity(c.dim(n, 0));
            id.blocks[{n, 0}] = m;
        }
        ChainComplex cn = cone(id);
        for (int n = 0; n + 1 <= cn.degree_cap; ++n) CHECK(chain_homology_total(cn, n) == 0);
    }

    SUBCASE("cone of zero map out of nothing is the target") {
        AlgebraPtr kk = catalog_algebra("kxk");
        ChainComplex c = underlying_complex(bar_mixed(kk, 4, 0), 4);
        ChainComplex zero;
        zero.degree_cap = 4;
        ChainMap f{zero, c, {}};
        ChainComplex cn = cone(f);
        for (int n = 0; n + 1 <= cn.degree_cap; ++n)
            CHECK(chain_homology_total(cn, n) == chain_homology_total(c, n));
    }

    SUBCASE("cone of multiplication by t on the weighted line") {
        // rank-1 free k[t]-module realized per weight: the target carries t^w
        // at weight w <= 4; multiplication by t raises weight, so the source
        // copy sits at weights 1..5 and maps weight-preservingly.
        ChainComplex target;
        target.degree_cap = 2;
        for (int w = 0; w <= 4; ++w) target.dims[{0, w}] = 1;
        ChainComplex source;
        source.degree_cap = 2;
        for (int w = 1; w <= 5; ++w) source.dims[{0, w}] = 1;
        ChainMap f{source, target, {}};
        for (int w = 1; w <= 4; ++w) {
            SparseMatrix one(1, 1);
            one.add(0, 0, 1);
            f.blocks[{0, w}] = one;
        }
        ChainComplex cn = cone(f);
        // homology: k in degree 0, weight 0 only (the cokernel of t); the
        // top weight 5 is the truncation edge, outside the read band
        CHECK(chain_homology(cn, 0, 0) == 1);
        for (int w = 1; w <= 4; ++w) CHECK(chain_homology(cn, 0, w) == 0);
        for (int w = 0; w <= 4; ++w) CHECK(chain_homology(cn, 1, w) == 0);
    }

    SUBCASE("a non-chain-map is rejected") {
        AlgebraPtr dual = catalog_algebra("dual");
        ChainComplex c = underlying_complex(bar_mixed(dual, 4, 0), 4);
        ChainMap bad{c, c, {}};
        for (int n = 0; n <= 4; ++n) {
            SparseMatrix m(c.dim(n, 0), c.dim(n, 0));
            m.add(0, 0, Rat(n + 1)); // scales differently per degree
            bad.blocks[{n, 0}] = m;
        }
        CHECK_THROWS_AS(cone(bad), NotChainMap);
    }

    SUBCASE("cone bookkeeping for null-homotopic maps between two-term complexes") {
        // f = (g o d_C, d_T o g) is a chain map for any g and vanishes on
        // homology, so dim H_n(cone) = dim H_n(T) + dim H_{n-1}(C).
        std::mt19937 rng(991);
        std::uniform_int_distribution<int> dim(1, 3), scalar(-2, 2);
        for (int trial = 0; trial < 12; ++trial) {
            int c1 = dim(rng), c0 = dim(rng), t1 = dim(rng), t0 = dim(rng);
            ChainComplex C, T;
            C.degree_cap = T.degree_cap = 3;
            C.dims[{0, 0}] = c0;
            C.dims[{1, 0}] = c1;
            T.dims[{0, 0}] = t0;
            T.dims[{1, 0}] = t1;
            SparseMatrix dC(c0, c1), dT(t0, t1), g(t1, c0);
            for (int i = 0; i < c0; ++i)
                for (int j = 0; j < c1; ++j) dC.add(i, j, Rat(scalar(rng)));
            for (int i = 0; i < t0; ++i)
                for (int j = 0; j < t1; ++j) dT.add(i, j, Rat(scalar(rng)));
            for (int i = 0; i < t1; ++i)
                for (int j = 0; j < c0; ++j) g.add(i, j, Rat(scalar(rng)));
            C.diff[{1, 0}] = dC;
            T.diff[{1, 0}] = dT;
            ChainMap f{C, T, {}};
            f.blocks[{0, 0}] = dT * g;
            f.blocks[{1, 0}] = g * dC;
            ChainComplex cn = cone(f);
            for (int n = 0; n <= 2; ++n) {
                int expect = chain_homology(T, n, 0) + (n >= 1 ? chain_homology(C, n - 1, 0) : 0);
                CHECK(chain_homology(cn, n, 0) == expect);
            }
        }
    }

    SUBCASE("cone homology matches the kernel/cokernel bookkeeping") {
        // random chain maps between complexes assembled from elementary pieces
        std::mt19937 rng(4242);
        std::uniform_int_distribution<int> coin(0, 1), scalar(-2, 2);
        for (int trial = 0; trial < 10; ++trial) {
            // source and target: span pieces in degrees 0..2 plus id-pairs
            ChainComplex s, t;
            s.degree_cap = t.degree_cap = 3;
            int sd0 = 1 + coin(rng), sd1 = 1 + coin(rng);
            int td0 = 1 + coin(rng), td1 = 1 + coin(rng);
            s.dims[{0, 0}] = sd0;
            s.dims[{1, 0}] = sd1;
            t.dims[{0, 0}] = td0;
            t.dims[{1, 0}] = td1;
            ChainMap f{s, t, {}};
            SparseMatrix f0(td0, sd0), f1(td1, sd1);
            for (int i = 0; i < td0; ++i)
                for (int j = 0; j < sd0; ++j) f0.add(i, j, Rat(scalar(rng)));
            for (int i = 0; i < td1; ++i)
                for (int j = 0; j < sd1; ++j) f1.add(i, j, Rat(scalar(rng)));
            f.blocks[{0, 0}] = f0;
            f.blocks[{1, 0}] = f1;
            // zero differentials: homology = chain groups, H(f) = f
            ChainComplex cn = cone(f);
            int h0 = chain_homology(cn, 0, 0);
            int h1 = chain_homology(cn, 1, 0);
            int r0 = rank(f0), r1 = rank(f1);
            CHECK(h0 == td0 - r0);            // coker in degree 0
            CHECK(h1 == (sd0 - r0) + (td1 - r1)); // ker + coker
        }
    }
}

TEST_CASE("induced maps on bar complexes") {
    SUBCASE("identity induces identity blocks") {
        AlgebraPtr kk = catalog_algebra("kxk");
        MixedMap f = induced_mixed_map(identity_morphism(kk), 4, 0);
        for (int n = 0; n <= 4; ++n)
            CHECK(f->block(n, 0) == SparseMatrix::identity(f->source()->dim(n, 0)));
    }

    SUBCASE("inclusion of the weight-zero part is injective per degree") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        GradingSplit s = grading_split(xi);
        MixedMap f = induced_mixed_map(s.inclusion, 4, 4);
        for (int n = 0; n <= 4; ++n) {
            SparseMatrix blk = f->block(n, 0);
            CHECK(rank(blk) == f->source()->dim(n, 0));
        }
        CHECK(check_mixed_map(f, 4, 4).empty());
    }

    SUBCASE("catalog morphisms commute with b and B") {
        KtMorphisms kt = kt_morphisms(3);
        CHECK(check_mixed_map(induced_mixed_map(kt.ev0, 4, 3), 4, 3).empty());
        CHECK(check_mixed_map(induced_mixed_map(kt.iota, 4, 3), 4, 3).empty());
        AlgebraPtr m2 = catalog_algebra("m2");
        CHECK(check_mixed_map(induced_mixed_map(identity_morphism(m2), 4, 0), 4, 0).empty());
    }

    SUBCASE("weight-shifting morphisms are rejected") {
        KtMorphisms kt = kt_morphisms(3);
        CHECK_THROWS_AS(induced_mixed_map(kt.ev1, 4, 3), ValidationError);
    }
}
