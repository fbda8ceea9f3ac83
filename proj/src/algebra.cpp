#include "cyclo/algebra.hpp"
#include "cyclo/errors.hpp"

#include <sstream>

namespace cyclo {

LinComb lc_term(int i, const Rat& c) {
    LinComb x;
    if (!is_zero(c)) x[i] = c;
    return x;
}

LinComb lc_axpy(const LinComb& a, const Rat& c, const LinComb& b) {
    LinComb out(a);
    for (const auto& [i, v] : b) {
        Rat& slot = out[i];
        slot += c * v;
        if (is_zero(slot)) out.erase(i);
    }
    return out;
}

LinComb lc_add(const LinComb& a, const LinComb& b) { return lc_axpy(a, Rat(1), b); }

LinComb lc_scale(const LinComb& a, const Rat& c) {
    LinComb out;
    if (is_zero(c)) return out;
    for (const auto& [i, v] : a) out[i] = c * v;
    return out;
}

bool lc_is_zero(const LinComb& a) { return a.empty(); }

int GradedAlgebra::index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

LinComb GradedAlgebra::mul_basis(int i, int j) const {
    if (i < 0 || i >= dim() || j < 0 || j >= dim())
        throw IndexOutOfRange("basis index out of range");
    // unit products are always defined, whatever the window
    if (i == unit) return lc_term(j);
    if (j == unit) return lc_term(i);
    if (!in_window(i, j))
        throw WindowOverflow("product " + labels[i] + " * " + labels[j] + " exceeds weight window " +
                             std::to_string(window) + " in " + name);
    auto it = products.find({i, j});
    if (it == products.end()) return {};
    return it->second;
}

LinComb GradedAlgebra::mul(const LinComb& x, const LinComb& y) const {
    LinComb out;
    for (const auto& [i, cx] : x)
        for (const auto& [j, cy] : y)
            out = lc_axpy(out, cx * cy, mul_basis(i, j));
    return out;
}

std::string GradedAlgebra::lc_str(const LinComb& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x) {
        if (!first) os << " + ";
        first = false;
        if (c != Rat(1)) os << rat_to_string(c) << "*";
        os << labels[i];
    }
    return os.str();
}

std::vector<std::string> validate(const GradedAlgebra& a) {
    std::vector<std::string> bad;
    const int n = a.dim();
    if (n == 0) {
        bad.push_back("empty basis");
        return bad;
    }
    if (a.unit < 0 || a.unit >= n) {
        bad.push_back("unit index out of range");
        return bad;
    }
    if (static_cast<int>(a.weights.size()) != n) {
        bad.push_back("weights/basis size mismatch");
        return bad;
    }
    if (a.weights[a.unit] != 0) bad.push_back("unit has nonzero weight");
    for (int i = 0; i < n; ++i)
        if (a.weights[i] < 0) bad.push_back("negative weight on " + a.labels[i]);

    for (const auto& [key, val] : a.products) {
        auto [i, j] = key;
        if (i < 0 || i >= n || j < 0 || j >= n) {
            bad.push_back("product key out of range");
            continue;
        }
        if (!a.in_window(i, j)) {
            bad.push_back("product " + a.labels[i] + " * " + a.labels[j] + " specified outside window");
            continue;
        }
        int w = a.weights[i] + a.weights[j];
        for (const auto& [k, c] : val) {
            if (k < 0 || k >= n) {
                bad.push_back("product value index out of range");
                continue;
            }
            if (is_zero(c)) bad.push_back("explicit zero coefficient stored");
            if (a.weights[k] != w)
                bad.push_back("grading violated: " + a.labels[i] + " * " + a.labels[j] +
                              " has a term of weight " + std::to_string(a.weights[k]));
        }
    }

    // Unit laws. mul_basis short-circuits the unit, so check stored entries.
    for (int i = 0; i < n; ++i) {
        for (auto [l, r] : {std::pair{a.unit, i}, std::pair{i, a.unit}}) {
            auto it = a.products.find({l, r});
            if (it != a.products.end() && it->second != lc_term(i))
                bad.push_back("unit law fails against stored product for " + a.labels[i]);
        }
    }

    // Associativity on triples inside the window.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.weights[i] + a.weights[j] > a.window) continue;
            for (int k = 0; k < n; ++k) {
                if (a.weights[i] + a.weights[j] + a.weights[k] > a.window) continue;
                LinComb lhs = a.mul(a.mul_basis(i, j), lc_term(k));
                LinComb rhs = a.mul(lc_term(i), a.mul_basis(j, k));
                if (lhs != rhs)
                    bad.push_back("associativity fails on (" + a.labels[i] + ", " + a.labels[j] +
                                  ", " + a.labels[k] + ")");
            }
        }
    return bad;
}

AlgebraPtr checked(GradedAlgebra a) {
    auto bad = validate(a);
    if (!bad.empty()) {
        std::string msg = "invalid algebra '" + a.name + "':";
        for (size_t i = 0; i < bad.size() && i < 4; ++i) msg += "\n  " + bad[i];
        throw ValidationError(msg);
    }
    return std::make_shared<GradedAlgebra>(std::move(a));
}

LinComb AlgebraMorphism::apply(const LinComb& x) const {
    LinComb out;
    for (const auto& [i, c] : x) out = lc_axpy(out, c, images.at(i));
    return out;
}

AlgebraMorphism make_morphism(AlgebraPtr src, AlgebraPtr tgt, std::vector<LinComb> images,
                              MulCheck check) {
    if (static_cast<int>(images.size()) != src->dim())
        throw ValidationError("morphism image count mismatch");
    AlgebraMorphism f{std::move(src), std::move(tgt), std::move(images)};
    if (f.images[f.source->unit] != lc_term(f.target->unit))
        throw ValidationError("morphism does not preserve the unit");
    if (check != MulCheck::None) {
        for (int i = 0; i < f.source->dim(); ++i)
            for (int j = 0; j < f.source->dim(); ++j) {
                if (!f.source->in_window(i, j)) continue;
                LinComb lhs = f.apply(f.source->mul_basis(i, j));
                LinComb rhs;
                try {
                    rhs = f.target->mul(f.images[i], f.images[j]);
                } catch (const WindowOverflow&) {
                    if (check == MulCheck::SkipOutsideTarget) continue;
                    throw;
                }
                if (lhs != rhs)
                    throw ValidationError("morphism not multiplicative on (" +
                                          f.source->labels[i] + ", " + f.source->labels[j] + ")");
            }
    }
    return f;
}

AlgebraMorphism identity_morphism(AlgebraPtr a) {
    std::vector<LinComb> images;
    for (int i = 0; i < a->dim(); ++i) images.push_back(lc_term(i));
    return AlgebraMorphism{a, a, std::move(images)};
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (f.target.get() != g.source.get() && f.target->labels != g.source->labels)
        throw ValidationError("composition source/target mismatch");
    std::vector<LinComb> images;
    images.reserve(f.images.size());
    for (const auto& im : f.images) images.push_back(g.apply(im));
    return AlgebraMorphism{f.source, g.target, std::move(images)};
}

bool morphisms_equal(const AlgebraMorphism& f, const AlgebraMorphism& g) {
    return f.images == g.images;
}

} // namespace cyclo
