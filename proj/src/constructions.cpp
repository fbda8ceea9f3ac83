#include "cyclo/constructions.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>

namespace cyclo {

AlgebraPtr rationals() {
    GradedAlgebra a;
    a.name = "q";
    a.labels = {"1"};
    a.weights = {0};
    a.unit = 0;
    a.window = 0;
    return checked(std::move(a));
}

AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b) {
    GradedAlgebra t;
    t.name = "(" + a->name + ")(x)(" + b->name + ")";
    const int nb = b->dim();
    auto pair_index = [nb](int i, int j) { return i * nb + j; };
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < nb; ++j) {
            t.labels.push_back("(" + a->labels[i] + "," + b->labels[j] + ")");
            t.weights.push_back(a->weights[i] + b->weights[j]);
        }
    t.unit = pair_index(a->unit, b->unit);

    // Largest window below which every componentwise product is defined.
    auto a_ok = [&](int i, int k) {
        return i == a->unit || k == a->unit || a->weights[i] + a->weights[k] <= a->window;
    };
    auto b_ok = [&](int j, int l) {
        return j == b->unit || l == b->unit || b->weights[j] + b->weights[l] <= b->window;
    };
    t.window = a->window + b->window;
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < a->dim(); ++k)
                for (int l = 0; l < nb; ++l)
                    if (!a_ok(i, k) || !b_ok(j, l)) {
                        int total = a->weights[i] + b->weights[j] + a->weights[k] + b->weights[l];
                        t.window = std::min(t.window, total - 1);
                    }

    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < a->dim(); ++k)
                for (int l = 0; l < nb; ++l) {
                    int li = pair_index(i, j), ri = pair_index(k, l);
                    if (t.weights[li] + t.weights[ri] > t.window) continue;
                    if (li == t.unit || ri == t.unit) continue;
                    LinComb pa = a->mul_basis(i, k);
                    LinComb pb = b->mul_basis(j, l);
                    LinComb out;
                    for (const auto& [x, cx] : pa)
                        for (const auto& [y, cy] : pb)
                            out = lc_axpy(out, cx * cy, lc_term(pair_index(x, y)));
                    if (!out.empty()) t.products[{li, ri}] = std::move(out);
                }
    return checked(std::move(t));
}

int PolyExtension::index_of(int base_idx, int t_exp) const {
    for (int i = 0; i < static_cast<int>(decomp.size()); ++i)
        if (decomp[i] == std::pair{base_idx, t_exp}) return i;
    return -1;
}

PolyExtension polynomial_extension(AlgebraPtr a, int t_cap) {
    if (t_cap < 0) throw IndexOutOfRange("negative t-degree cap");
    PolyExtension e;
    e.base = a;
    e.t_cap = t_cap;
    GradedAlgebra t;
    t.name = a->name + "[t]";
    t.window = a->window + t_cap;
    for (int k = 0; k <= t_cap; ++k)
        for (int i = 0; i < a->dim(); ++i) {
            std::string tl = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
            std::string bl = a->labels[i];
            t.labels.push_back(k == 0 ? bl : (i == a->unit ? tl : bl + "*" + tl));
            t.weights.push_back(a->weights[i] + k);
            e.decomp.emplace_back(i, k);
        }
    auto idx = [&](int i, int k) { return k * a->dim() + i; };
    t.unit = idx(a->unit, 0);

    // Largest window below which both the base product and the t-exponent cap hold.
    for (int k = 0; k <= t_cap; ++k)
        for (int i = 0; i < a->dim(); ++i)
            for (int l = 0; l <= t_cap; ++l)
                for (int j = 0; j < a->dim(); ++j) {
                    if (idx(i, k) == t.unit || idx(j, l) == t.unit) continue;
                    bool base_ok = i == a->unit || j == a->unit ||
                                   a->weights[i] + a->weights[j] <= a->window;
                    if (!base_ok || k + l > t_cap) {
                        int total = a->weights[i] + k + a->weights[j] + l;
                        t.window = std::min(t.window, total - 1);
                    }
                }

    for (int k = 0; k <= t_cap; ++k)
        for (int i = 0; i < a->dim(); ++i)
            for (int l = 0; l <= t_cap; ++l)
                for (int j = 0; j < a->dim(); ++j) {
                    int li = idx(i, k), ri = idx(j, l);
                    if (li == t.unit || ri == t.unit) continue;
                    if (t.weights[li] + t.weights[ri] > t.window) continue;
                    LinComb out;
                    for (const auto& [x, c] : a->mul_basis(i, j)) out[idx(x, k + l)] = c;
                    if (!out.empty()) t.products[{li, ri}] = std::move(out);
                }
    e.algebra = checked(std::move(t));
    return e;
}

AlgebraMorphism ev0_t(const PolyExtension& e) {
    std::vector<LinComb> images;
    for (auto [b, k] : e.decomp) images.push_back(k == 0 ? lc_term(b) : LinComb{});
    return make_morphism(e.algebra, e.base, std::move(images));
}

AlgebraMorphism ev1_t(const PolyExtension& e) {
    std::vector<LinComb> images;
    for (auto [b, k] : e.decomp) images.push_back(lc_term(b));
    return make_morphism(e.algebra, e.base, std::move(images));
}

AlgebraMorphism iota_t(const PolyExtension& e) {
    std::vector<LinComb> images;
    for (int b = 0; b < e.base->dim(); ++b) {
        int i = e.index_of(b, 0);
        if (i < 0) throw IndexOutOfRange("polynomial extension misses a base element");
        images.push_back(lc_term(i));
    }
    return make_morphism(e.base, e.algebra, std::move(images));
}

GradingSplit grading_split(AlgebraPtr a) {
    for (int w : a->weights)
        if (w < 0) throw NotNonNegativelyGraded("negative weight present");

    GradedAlgebra a0;
    a0.name = a->name + "_0";
    a0.window = a->window;
    std::vector<int> to_sub(a->dim(), -1);
    std::vector<int> to_full;
    for (int i = 0; i < a->dim(); ++i)
        if (a->weights[i] == 0) {
            to_sub[i] = static_cast<int>(to_full.size());
            to_full.push_back(i);
            a0.labels.push_back(a->labels[i]);
            a0.weights.push_back(0);
        }
    a0.unit = to_sub[a->unit];
    for (size_t i = 0; i < to_full.size(); ++i)
        for (size_t j = 0; j < to_full.size(); ++j) {
            if (static_cast<int>(i) == a0.unit || static_cast<int>(j) == a0.unit) continue;
            LinComb out;
            for (const auto& [k, c] : a->mul_basis(to_full[i], to_full[j])) {
                // weight-0 products stay in weight 0
                out[to_sub[k]] = c;
            }
            if (!out.empty()) a0.products[{static_cast<int>(i), static_cast<int>(j)}] = std::move(out);
        }
    AlgebraPtr a0p = checked(std::move(a0));

    std::vector<LinComb> inc, proj;
    for (size_t i = 0; i < to_full.size(); ++i) inc.push_back(lc_term(to_full[i]));
    for (int i = 0; i < a->dim(); ++i)
        proj.push_back(a->weights[i] == 0 ? lc_term(to_sub[i]) : LinComb{});
    return GradingSplit{a0p, make_morphism(a0p, a, std::move(inc)),
                        make_morphism(a, a0p, std::move(proj))};
}

AlgebraMorphism grading_homotopy(AlgebraPtr a, const PolyExtension& e) {
    if (e.base.get() != a.get())
        throw ValidationError("homotopy target is an extension of a different algebra");
    int max_w = *std::max_element(a->weights.begin(), a->weights.end());
    if (e.t_cap < max_w)
        throw WindowOverflow("t-degree cap too small for the grading homotopy");
    std::vector<LinComb> images;
    for (int i = 0; i < a->dim(); ++i) {
        int j = e.index_of(i, a->weights[i]);
        if (j < 0) throw WindowOverflow("a*t^weight(a) missing from the extension");
        images.push_back(lc_term(j));
    }
    return make_morphism(a, e.algebra, std::move(images), MulCheck::SkipOutsideTarget);
}

KtMorphisms kt_morphisms(int window) {
    AlgebraPtr k = rationals();
    PolyExtension kt = polynomial_extension(k, window);
    AlgebraMorphism iota = iota_t(kt);
    AlgebraMorphism e0 = ev0_t(kt);
    AlgebraMorphism e1 = ev1_t(kt);
    return KtMorphisms{k, std::move(kt), std::move(iota), std::move(e0), std::move(e1)};
}

namespace {

AlgebraPtr dual_numbers(bool graded) {
    GradedAlgebra a;
    a.name = graded ? "xi-graded" : "dual";
    a.labels = {"1", graded ? "xi" : "x"};
    a.weights = {0, graded ? 1 : 0};
    a.unit = 0;
    a.window = graded ? 2 : 0;
    a.products[{1, 1}] = {};
    return checked(std::move(a));
}

AlgebraPtr truncated_poly3() {
    GradedAlgebra a;
    a.name = "x3";
    a.labels = {"1", "x", "x2"};
    a.weights = {0, 0, 0};
    a.unit = 0;
    a.window = 0;
    a.products[{1, 1}] = lc_term(2);
    a.products[{1, 2}] = {};
    a.products[{2, 1}] = {};
    a.products[{2, 2}] = {};
    return checked(std::move(a));
}

AlgebraPtr product_kk() {
    GradedAlgebra a;
    a.name = "kxk";
    a.labels = {"1", "e"};
    a.weights = {0, 0};
    a.unit = 0;
    a.window = 0;
    a.products[{1, 1}] = lc_term(1);
    return checked(std::move(a));
}

AlgebraPtr matrix2() {
    // Basis 1, a = e11, b = e12, c = e21; e22 = 1 - a.
    GradedAlgebra m;
    m.name = "m2";
    m.labels = {"1", "a", "b", "c"};
    m.weights = {0, 0, 0, 0};
    m.unit = 0;
    m.window = 0;
    auto set = [&m](int i, int j, LinComb v) { m.products[{i, j}] = std::move(v); };
    set(1, 1, lc_term(1));                       // e11 e11 = e11
    set(1, 2, lc_term(2));                       // e11 e12 = e12
    set(1, 3, {});                               // e11 e21 = 0
    set(2, 1, {});                               // e12 e11 = 0
    set(2, 2, {});                               // e12 e12 = 0
    set(2, 3, lc_term(1));                       // e12 e21 = e11
    set(3, 1, lc_term(3));                       // e21 e11 = e21
    set(3, 2, lc_axpy(lc_term(0), Rat(-1), lc_term(1))); // e21 e12 = e22 = 1 - e11
    set(3, 3, {});                               // e21 e21 = 0
    return checked(std::move(m));
}

} // namespace

std::vector<CatalogEntry> standard_library(int kt_window) {
    std::vector<CatalogEntry> out;
    out.push_back({"q", "ground field Q", rationals()});
    out.push_back({"dual", "dual numbers k[x]/x^2, ungraded", dual_numbers(false)});
    out.push_back({"x3", "truncated polynomials k[x]/x^3, ungraded", truncated_poly3()});
    out.push_back({"kxk", "product algebra k x k", product_kk()});
    out.push_back({"m2", "2x2 matrix algebra M_2(k)", matrix2()});
    out.push_back({"xi-graded", "graded dual numbers k[xi]/xi^2, xi of weight 1", dual_numbers(true)});
    out.push_back({"kt", "polynomial algebra k[t], t of weight 1, windowed",
                   polynomial_extension(rationals(), kt_window).algebra});
    return out;
}

AlgebraPtr catalog_algebra(const std::string& key, int kt_window) {
    for (auto& e : standard_library(kt_window))
        if (e.key == key) return e.algebra;
    if (key == "x2") return dual_numbers(false);
    return nullptr;
}

} // namespace cyclo
