#include "cyclo/errors.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/sparse.hpp"

#include <doctest.h>

#include <random>

using namespace cyclo;

namespace {

// Independent oracle: dense Gaussian elimination, no pivot heuristics shared
// with the engine path.
int dense_rank(std::vector<std::vector<Rat>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

SparseMatrix from_dense(const std::vector<std::vector<Rat>>& d) {
    int rows = static_cast<int>(d.size());
    int cols = rows ? static_cast<int>(d[0].size()) : 0;
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.add(i, j, d[i][j]);
    return m;
}

std::vector<std::vector<Rat>> random_dense(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<std::vector<Rat>> d(rows, std::vector<Rat>(cols));
    for (auto& row : d)
        for (auto& e : row) e = Rat(entry(rng));
    return d;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(SparseMatrix::identity(2)) == 2);
    CHECK(rank(SparseMatrix(3, 5)) == 0);
    SparseMatrix m(2, 2);
    m.add(0, 0, 1);
    m.add(0, 1, 2);
    m.add(1, 0, 2);
    m.add(1, 1, 4);
    CHECK(rank(m) == 1);
}

TEST_CASE("rank equals transpose rank on random matrices") {
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 40; ++trial) {
        auto d = random_dense(rng, 1 + trial % 5, 1 + (trial * 7) % 6);
        SparseMatrix m = from_dense(d);
        int r = rank(m);
        CHECK(r == rank(m.transpose()));
        CHECK(r == dense_rank(d));
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto d = random_dense(rng, 2 + trial % 4, 2 + (trial * 5) % 5);
        SparseMatrix m = from_dense(d);
        auto ker = kernel_basis(m);
        CHECK(static_cast<int>(ker.size()) == m.cols() - rank(m));
        for (const auto& v : ker) {
            std::map<int, Rat> acc;
            m.apply(v, Rat(1), acc);
            CHECK(acc.empty());
        }
        // kernel vectors are jointly independent
        ColumnReducer red;
        for (const auto& v : ker) CHECK(red.insert(v));
    }
}

TEST_CASE("homology dimensions") {
    SUBCASE("zero differentials") {
        SparseMatrix d_in(2, 0), d_out(0, 2);
        CHECK(homology_dim(d_in, d_out) == 2);
    }
    SUBCASE("exact sequence") {
        SparseMatrix d_in(2, 1); // 1 -> (1, 0)
        d_in.add(0, 0, 1);
        SparseMatrix d_out(1, 2); // (x, y) -> y
        d_out.add(0, 1, 1);
        CHECK(homology_dim(d_in, d_out) == 0);
    }
    SUBCASE("zero maps on Q^n") {
        for (int n : {1, 3, 5}) {
            SparseMatrix z(n, n);
            CHECK(homology_dim(z, z) == n);
        }
    }
    SUBCASE("nonzero composition is rejected") {
        SparseMatrix d_in = SparseMatrix::identity(2);
        SparseMatrix d_out = SparseMatrix::identity(2);
        CHECK_THROWS_AS(homology_dim(d_in, d_out), CompositionNonzero);
    }
    SUBCASE("bounded by the middle dimension") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            int mid = 2 + trial % 4;
            // d_in with image inside ker(d_out): take d_out = 0
            SparseMatrix d_out(1 + trial % 3, mid);
            auto d = random_dense(rng, mid, 2);
            SparseMatrix d_in = from_dense(d);
            int h = homology_dim(d_in, d_out);
            CHECK(h >= 0);
            CHECK(h <= mid);
        }
    }
}

TEST_CASE("polynomial arithmetic") {
    Poly t = Poly::t();
    Poly p = t * t - Poly(1);          // t^2 - 1
    Poly q = t - Poly(1);
    auto [quot, rem] = p.divmod(q);
    CHECK(rem.is_zero());
    CHECK(quot == t + Poly(1));
    CHECK(poly_gcd(p, q) == q.monic());
    CHECK(Poly::monomial(Rat(3), 2).is_unit_times_t_power());
    CHECK(!p.is_unit_times_t_power());
    CHECK(p.eval(Rat(2)) == Rat(3));
}

TEST_CASE("smith normal form over Q[t]") {
    SUBCASE("single entry t") {
        auto div = elementary_divisors({{Poly::t()}});
        REQUIRE(div.size() == 1);
        CHECK(div[0] == Poly::t());
    }
    SUBCASE("diagonal, divisibility already ordered") {
        auto div = elementary_divisors({{Poly::t(), Poly()}, {Poly(), Poly::t(2)}});
        REQUIRE(div.size() == 2);
        CHECK(div[0] == Poly::t());
        CHECK(div[1] == Poly::t(2));
    }
    SUBCASE("coprime diagonal collapses to 1, t(t-1)") {
        // 2x2 oracle: d1 = gcd of the entries, d2 = det / d1
        Poly a = Poly::t() - Poly(1), b = Poly::t();
        Poly d1 = poly_gcd(a, b);
        Poly d2 = (a * b).divmod(d1).first.monic();
        CHECK(d1 == Poly(1));
        auto div = elementary_divisors({{a, Poly()}, {Poly(), b}});
        REQUIRE(div.size() == 2);
        CHECK(div[0] == d1);
        CHECK(div[1] == d2);
        CHECK(div[1] == Poly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)})); // t^2 - t
    }
    SUBCASE("product of divisors equals the normalized determinant") {
        std::mt19937 rng(31337);
        std::uniform_int_distribution<int> entry(-2, 2);
        std::uniform_int_distribution<int> deg(0, 2);
        for (int trial = 0; trial < 15; ++trial) {
            PolyMatrix m = pm_zero(3, 3);
            for (auto& row : m)
                for (auto& e : row) {
                    std::vector<Rat> cs(deg(rng) + 1);
                    for (auto& c : cs) c = Rat(entry(rng));
                    e = Poly(cs);
                }
            Poly det = pm_det(m);
            if (det.is_zero()) continue;
            auto div = elementary_divisors(m);
            REQUIRE(div.size() == 3);
            Poly prod = div[0] * div[1] * div[2];
            CHECK(prod == det.monic());
            CHECK(div[0].divides(div[1]));
            CHECK(div[1].divides(div[2]));
        }
    }
    SUBCASE("kernel columns of V") {
        // rank-1 matrix [[t, t],[t, t]]: kernel is free of rank 1
        PolyMatrix m = {{Poly::t(), Poly::t()}, {Poly::t(), Poly::t()}};
        SmithResult s = smith_normal_form(m);
        CHECK(s.rank == 1);
        // A * (last column of V) = 0
        PolyMatrix last = pm_zero(2, 1);
        last[0][0] = s.V[0][1];
        last[1][0] = s.V[1][1];
        CHECK(pm_is_zero(pm_mul(m, last)));
        // V * Vinv = 1
        CHECK(pm_mul(s.V, s.Vinv) == pm_identity(2));
    }
}
