#include "cyclo/simplicial.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cyclo {

namespace {

using Expo = std::vector<int>; // exponent vector over t_1..t_n

int total(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string monomial_label(const Expo& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "t" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
    }
    return first ? "1" : os.str();
}

// All exponent vectors with total degree <= d, graded-lex order.
std::vector<Expo> enumerate_monomials(int n, int d) {
    std::vector<Expo> out;
    Expo cur(n, 0);
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur[pos] = e;
            self(self, pos + 1, budget - e);
            cur[pos] = 0;
        }
    };
    rec(rec, 0, d);
    std::stable_sort(out.begin(), out.end(),
                     [](const Expo& a, const Expo& b) { return total(a) < total(b); });
    return out;
}

struct SimplexLevel {
    AlgebraPtr algebra;
    std::vector<Expo> monomials;
    std::map<Expo, int> index;
};

const SimplexLevel& build_level(int n, int d);

SimplexLevel build_level_uncached(int n, int d) {
    SimplexLevel lvl;
    lvl.monomials = enumerate_monomials(n, d);
    GradedAlgebra a;
    a.name = "Delta" + std::to_string(n);
    a.window = d;
    for (int i = 0; i < static_cast<int>(lvl.monomials.size()); ++i) {
        lvl.index[lvl.monomials[i]] = i;
        a.labels.push_back(monomial_label(lvl.monomials[i]));
        a.weights.push_back(total(lvl.monomials[i]));
    }
    a.unit = lvl.index.at(Expo(n, 0));
    for (size_t i = 0; i < lvl.monomials.size(); ++i)
        for (size_t j = 0; j < lvl.monomials.size(); ++j) {
            if (static_cast<int>(i) == a.unit || static_cast<int>(j) == a.unit) continue;
            if (total(lvl.monomials[i]) + total(lvl.monomials[j]) > d) continue;
            Expo s(n);
            for (int k = 0; k < n; ++k) s[k] = lvl.monomials[i][k] + lvl.monomials[j][k];
            a.products[{static_cast<int>(i), static_cast<int>(j)}] = lc_term(lvl.index.at(s));
        }
    lvl.algebra = checked(std::move(a));
    return lvl;
}

const SimplexLevel& build_level(int n, int d) {
    if (n < 0 || d < 0) throw IndexOutOfRange("simplex level/degree out of range");
    static std::map<std::pair<int, int>, SimplexLevel> cache;
    auto it = cache.find({n, d});
    if (it == cache.end()) it = cache.emplace(std::pair{n, d}, build_level_uncached(n, d)).first;
    return it->second;
}

// Builds the morphism out of images of the presented generators
// (degree <= 1 linear combinations in the target level).
AlgebraMorphism substitution_morphism(const SimplexLevel& src, int src_n, const SimplexLevel& tgt,
                                      const std::vector<LinComb>& gen_images, int d) {
    std::vector<LinComb> images(src.monomials.size());
    for (size_t m = 0; m < src.monomials.size(); ++m) {
        const Expo& e = src.monomials[m];
        LinComb acc = lc_term(tgt.algebra->unit);
        try {
            for (int j = 0; j < src_n; ++j)
                for (int rep = 0; rep < e[j]; ++rep) acc = tgt.algebra->mul(acc, gen_images[j]);
        } catch (const WindowOverflow&) {
            throw DegreeOverflow("substitution image exceeds degree truncation " + std::to_string(d));
        }
        images[m] = std::move(acc);
    }
    return make_morphism(src.algebra, tgt.algebra, std::move(images));
}

// t_0' = 1 - t_1' - ... - t_m' in the level-m algebra.
LinComb t0_expansion(const SimplexLevel& lvl, int m) {
    LinComb x = lc_term(lvl.algebra->unit);
    for (int j = 1; j <= m; ++j) {
        Expo g(m, 0);
        g[j - 1] = 1;
        x = lc_axpy(x, Rat(-1), lc_term(lvl.index.at(g)));
    }
    return x;
}

LinComb generator(const SimplexLevel& lvl, int m, int j) { // t_j, 1 <= j <= m
    Expo g(m, 0);
    g[j - 1] = 1;
    return lc_term(lvl.index.at(g));
}

} // namespace

AlgebraPtr simplex_algebra(int n, int d) { return build_level(n, d).algebra; }

AlgebraMorphism simplex_face(int n, int r, int d) {
    if (n < 1 || r < 0 || r > n) throw IndexOutOfRange("face index out of range");
    const SimplexLevel& src = build_level(n, d);
    const SimplexLevel& tgt = build_level(n - 1, d);
    // On the full coordinates t_j -> t_j (j<r), 0 (j=r), t_{j-1} (j>r);
    // read off at the presented generators j = 1..n, expanding t_0 at the target.
    std::vector<LinComb> gen_images(n);
    for (int j = 1; j <= n; ++j) {
        LinComb img;
        if (j < r) img = generator(tgt, n - 1, j);
        else if (j == r) img = {};
        else if (j - 1 == 0) img = t0_expansion(tgt, n - 1);
        else img = generator(tgt, n - 1, j - 1);
        gen_images[j - 1] = std::move(img);
    }
    return substitution_morphism(src, n, tgt, gen_images, d);
}

AlgebraMorphism simplex_degeneracy(int n, int r, int d) {
    if (n < 0 || r < 0 || r > n) throw IndexOutOfRange("degeneracy index out of range");
    const SimplexLevel& src = build_level(n, d);
    const SimplexLevel& tgt = build_level(n + 1, d);
    std::vector<LinComb> gen_images(n);
    for (int j = 1; j <= n; ++j) {
        LinComb img;
        if (j < r) img = generator(tgt, n + 1, j);
        else if (j == r) img = lc_add(generator(tgt, n + 1, j), generator(tgt, n + 1, j + 1));
        else img = generator(tgt, n + 1, j + 1);
        gen_images[j - 1] = std::move(img);
    }
    return substitution_morphism(src, n, tgt, gen_images, d);
}

namespace {

bool equal_on_generators(const AlgebraMorphism& f, const AlgebraMorphism& g, int src_n, int d) {
    const SimplexLevel& src = build_level(src_n, d);
    for (int j = 1; j <= src_n; ++j) {
        LinComb gj = generator(src, src_n, j);
        if (f.apply(gj) != g.apply(gj)) return false;
    }
    return true;
}

} // namespace

std::vector<std::string> check_simplicial_identities(int n_max, int d) {
    std::vector<std::string> bad;
    auto note = [&bad](int n, const std::string& what, int r, int s) {
        std::ostringstream os;
        os << what << " fails at level " << n << " with (r, s) = (" << r << ", " << s << ")";
        bad.push_back(os.str());
    };

    for (int n = 0; n <= n_max; ++n) {
        // face o face: d_r d_s = d_{s-1} d_r for r < s
        if (n >= 2)
            for (int s = 1; s <= n; ++s)
                for (int r = 0; r < s; ++r) {
                    auto lhs = compose(simplex_face(n - 1, r, d), simplex_face(n, s, d));
                    auto rhs = compose(simplex_face(n - 1, s - 1, d), simplex_face(n, r, d));
                    if (!equal_on_generators(lhs, rhs, n, d)) note(n, "face-face identity", r, s);
                }
        // degeneracy o degeneracy: s_r s_s = s_{s+1} s_r for r <= s
        for (int s = 0; s <= n; ++s)
            for (int r = 0; r <= s; ++r) {
                auto lhs = compose(simplex_degeneracy(n + 1, r, d), simplex_degeneracy(n, s, d));
                auto rhs = compose(simplex_degeneracy(n + 1, s + 1, d), simplex_degeneracy(n, r, d));
                if (!equal_on_generators(lhs, rhs, n, d)) note(n, "degeneracy-degeneracy identity", r, s);
            }
        // mixed: d_r s_s = s_{s-1} d_r (r < s); d_s s_s = id = d_{s+1} s_s;
        //        d_r s_s = s_s d_{r-1} (r > s + 1)
        for (int s = 0; s <= n; ++s)
            for (int r = 0; r <= n + 1; ++r) {
                auto ds = simplex_degeneracy(n, s, d);
                auto face_r = simplex_face(n + 1, r, d);
                auto lhs = compose(face_r, ds);
                if (r < s) {
                    auto rhs = compose(simplex_degeneracy(n - 1, s - 1, d), simplex_face(n, r, d));
                    if (!equal_on_generators(lhs, rhs, n, d)) note(n, "face-degeneracy identity", r, s);
                } else if (r == s || r == s + 1) {
                    if (!equal_on_generators(lhs, identity_morphism(simplex_algebra(n, d)), n, d))
                        note(n, "face-degeneracy unit identity", r, s);
                } else {
                    auto rhs = compose(simplex_degeneracy(n - 1, s, d), simplex_face(n, r - 1, d));
                    if (!equal_on_generators(lhs, rhs, n, d)) note(n, "face-degeneracy identity", r, s);
                }
            }
    }
    return bad;
}

} // namespace cyclo
