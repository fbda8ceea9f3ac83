#include "cyclo/constructions.hpp"
#include "cyclo/errors.hpp"

#include <doctest.h>

using namespace cyclo;

TEST_CASE("validation") {
    SUBCASE("ground field is valid") { CHECK(validate(*rationals()).empty()); }

    SUBCASE("injected associativity violation is caught") {
        GradedAlgebra a;
        a.name = "broken";
        a.labels = {"1", "x", "y"};
        a.weights = {0, 0, 0};
        a.unit = 0;
        a.window = 0;
        a.products[{1, 1}] = lc_term(2); // x*x = y
        a.products[{1, 2}] = lc_term(1); // x*y = x, so (xx)x = yx = 0 but x(xy) = y
        a.products[{2, 1}] = {};
        a.products[{2, 2}] = {};
        auto bad = validate(a);
        CHECK(!bad.empty());
        bool assoc = false;
        for (auto& b : bad) assoc |= b.find("associativity") != std::string::npos;
        CHECK(assoc);
    }

    SUBCASE("graded dual numbers validate") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        REQUIRE(xi);
        CHECK(validate(*xi).empty());
        CHECK(xi->weights[xi->index_of("xi")] == 1);
    }

    SUBCASE("every catalog algebra validates") {
        for (const auto& e : standard_library()) CHECK(validate(*e.algebra).empty());
    }
}

TEST_CASE("catalog structure") {
    SUBCASE("k x k carries two orthogonal idempotents summing to 1") {
        AlgebraPtr a = catalog_algebra("kxk");
        int e = a->index_of("e");
        LinComb e1 = lc_term(e);
        LinComb e2 = lc_axpy(lc_term(a->unit), Rat(-1), lc_term(e)); // 1 - e
        CHECK(a->mul(e1, e1) == e1);
        CHECK(a->mul(e2, e2) == e2);
        CHECK(a->mul(e1, e2) == LinComb{});
        CHECK(a->mul(e2, e1) == LinComb{});
        CHECK(lc_add(e1, e2) == lc_term(a->unit));
    }

    SUBCASE("matrix units of M2 satisfy e_ij e_kl = [j=k] e_il") {
        AlgebraPtr a = catalog_algebra("m2");
        LinComb e11 = lc_term(a->index_of("a"));
        LinComb e12 = lc_term(a->index_of("b"));
        LinComb e21 = lc_term(a->index_of("c"));
        LinComb e22 = lc_axpy(lc_term(a->unit), Rat(-1), e11);
        LinComb units[2][2] = {{e11, e12}, {e21, e22}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        LinComb prod = a->mul(units[i][j], units[k][l]);
                        CHECK(prod == (j == k ? units[i][l] : LinComb{}));
                    }
    }

    SUBCASE("k[x]/x^3 truncates at x^2") {
        AlgebraPtr a = catalog_algebra("x3");
        int x = a->index_of("x"), x2 = a->index_of("x2");
        CHECK(a->mul_basis(x, x) == lc_term(x2));
        CHECK(a->mul_basis(x, x2) == LinComb{});
        CHECK(a->dim() == 3);
    }
}

TEST_CASE("tensor algebra") {
    SUBCASE("Q (x) A is A with relabeled basis") {
        AlgebraPtr a = catalog_algebra("m2");
        AlgebraPtr t = tensor_algebra(rationals(), a);
        CHECK(t->dim() == a->dim());
        CHECK(t->window == a->window);
        for (int i = 0; i < a->dim(); ++i)
            for (int j = 0; j < a->dim(); ++j) {
                LinComb p = a->mul_basis(i, j);
                LinComb q = t->mul_basis(i, j); // pair index (0, i) = i
                CHECK(p == q);
            }
    }

    SUBCASE("(kxk) (x) (kxk) has four orthogonal idempotents") {
        AlgebraPtr kk = catalog_algebra("kxk");
        AlgebraPtr t = tensor_algebra(kk, kk);
        REQUIRE(t->dim() == 4);
        // idempotents f = p (x) q with p, q in {e, 1-e}
        int e = kk->index_of("e");
        auto pair_lc = [&](const LinComb& x, const LinComb& y) {
            LinComb out;
            for (auto& [i, ci] : x)
                for (auto& [j, cj] : y) out = lc_axpy(out, ci * cj, lc_term(i * 2 + j));
            return out;
        };
        LinComb idem[2] = {lc_term(e), lc_axpy(lc_term(kk->unit), Rat(-1), lc_term(e))};
        std::vector<LinComb> fs;
        for (auto& p : idem)
            for (auto& q : idem) fs.push_back(pair_lc(p, q));
        LinComb sum;
        for (size_t i = 0; i < fs.size(); ++i) {
            sum = lc_add(sum, fs[i]);
            for (size_t j = 0; j < fs.size(); ++j)
                CHECK(t->mul(fs[i], fs[j]) == (i == j ? fs[i] : LinComb{}));
        }
        CHECK(sum == lc_term(t->unit));
    }

    SUBCASE("xi (x) xi is square-zero and nonzero") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        AlgebraPtr t = tensor_algebra(xi, xi);
        int xx = t->index_of("(xi,xi)");
        REQUIRE(xx >= 0);
        CHECK(t->weights[xx] == 2);
        CHECK(t->mul_basis(xx, xx) == LinComb{});
        // xi(x)1 times 1(x)xi = xi(x)xi
        int x1 = t->index_of("(xi,1)"), ix = t->index_of("(1,xi)");
        CHECK(t->mul_basis(x1, ix) == lc_term(xx));
    }

    SUBCASE("constructed tensors validate") {
        AlgebraPtr kk = catalog_algebra("kxk");
        CHECK(validate(*tensor_algebra(kk, kk)).empty());
        CHECK(validate(*tensor_algebra(catalog_algebra("xi-graded"), catalog_algebra("xi-graded"))).empty());
    }
}

TEST_CASE("polynomial extension") {
    SUBCASE("k[t] truncated at degree 2") {
        PolyExtension e = polynomial_extension(rationals(), 2);
        CHECK(e.algebra->dim() == 3);
        CHECK(e.algebra->labels == std::vector<std::string>{"1", "t", "t^2"});
        CHECK(e.algebra->window == 2);
    }
    SUBCASE("xi-graded extension has the tensor basis") {
        PolyExtension e = polynomial_extension(catalog_algebra("xi-graded"), 1);
        CHECK(e.algebra->dim() == 4); // 1, xi, t, xi*t
        CHECK(e.index_of(0, 1) >= 0);
        CHECK(e.index_of(1, 1) >= 0);
    }
    SUBCASE("extensions validate") {
        for (const auto& entry : standard_library())
            CHECK(validate(*polynomial_extension(entry.algebra, 2).algebra).empty());
    }
}

TEST_CASE("kt morphisms") {
    KtMorphisms kt = kt_morphisms(3);
    int t1 = kt.kt.index_of(0, 1), t2 = kt.kt.index_of(0, 2);
    CHECK(kt.ev0.apply(lc_term(t1)) == LinComb{});
    CHECK(kt.ev1.apply(lc_term(t2)) == lc_term(0));
    CHECK(morphisms_equal(compose(kt.ev0, kt.iota), identity_morphism(kt.k)));
    CHECK(morphisms_equal(compose(kt.ev1, kt.iota), identity_morphism(kt.k)));
}

TEST_CASE("grading split and homotopy") {
    SUBCASE("p kills the positive part of the graded dual numbers") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        GradingSplit s = grading_split(xi);
        CHECK(s.a0->dim() == 1);
        CHECK(s.projection.apply_basis(xi->index_of("xi")) == LinComb{});
        CHECK(s.projection.apply_basis(xi->unit) == lc_term(s.a0->unit));
        CHECK(morphisms_equal(compose(s.projection, s.inclusion), identity_morphism(s.a0)));
    }

    SUBCASE("p kills t on windowed k[t]") {
        AlgebraPtr kt = catalog_algebra("kt", 3);
        GradingSplit s = grading_split(kt);
        CHECK(s.a0->dim() == 1);
        CHECK(s.projection.apply_basis(kt->index_of("t")) == LinComb{});
    }

    SUBCASE("p o i = id across the catalog") {
        for (const auto& e : standard_library(3)) {
            GradingSplit s = grading_split(e.algebra);
            CHECK(morphisms_equal(compose(s.projection, s.inclusion), identity_morphism(s.a0)));
        }
    }

    SUBCASE("homotopy sends xi to xi*t and 1 to 1") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        PolyExtension e = polynomial_extension(xi, 1);
        AlgebraMorphism h = grading_homotopy(xi, e);
        CHECK(h.apply_basis(xi->index_of("xi")) == lc_term(e.index_of(1, 1)));
        CHECK(h.apply_basis(xi->unit) == lc_term(e.algebra->unit));

        GradingSplit s = grading_split(xi);
        CHECK(morphisms_equal(compose(ev1_t(e), h), identity_morphism(xi)));
        CHECK(morphisms_equal(compose(ev0_t(e), h), compose(s.inclusion, s.projection)));
    }

    SUBCASE("homotopy relations on windowed k[t]") {
        AlgebraPtr kt = catalog_algebra("kt", 2);
        PolyExtension e = polynomial_extension(kt, 2);
        AlgebraMorphism h = grading_homotopy(kt, e);
        GradingSplit s = grading_split(kt);
        CHECK(morphisms_equal(compose(ev1_t(e), h), identity_morphism(kt)));
        CHECK(morphisms_equal(compose(ev0_t(e), h), compose(s.inclusion, s.projection)));
    }

    SUBCASE("homotopy needs a large enough cap") {
        AlgebraPtr xi = catalog_algebra("xi-graded");
        PolyExtension e = polynomial_extension(xi, 0);
        CHECK_THROWS_AS(grading_homotopy(xi, e), WindowOverflow);
    }
}
