#include "cyclo/mixed.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace cyclo {

namespace {

using Tuple = std::vector<int>; // slot 0 in A, slots 1..n in Abar

// Normalized Hochschild chains of a graded algebra, blocks built on demand.
class BarModel : public MixedModel {
public:
    BarModel(AlgebraPtr a, int n_max, int w_max) : a_(std::move(a)), n_max_(n_max), w_max_(w_max) {
        // every product the boundary can request must be inside the window
        for (int i = 0; i < a_->dim(); ++i)
            for (int j = 0; j < a_->dim(); ++j) {
                if (i == a_->unit || j == a_->unit) continue;
                int ws = a_->weights[i] + a_->weights[j];
                if (ws <= w_max_ && ws > a_->window)
                    throw WindowOverflow("bar complex weight bound " + std::to_string(w_max_) +
                                         " needs products beyond the algebra window of " + a_->name);
            }
        for (int i = 0; i < a_->dim(); ++i)
            if (i != a_->unit) nonunit_.push_back(i);
        graded_ = false;
        for (int w : a_->weights) graded_ |= w != 0;
    }

    std::string name() const override { return "bar(" + a_->name + ")"; }
    int degree_cap() const override { return n_max_; }
    int weight_window() const override { return graded_ ? w_max_ : 0; }

    std::vector<int> weights() const override {
        std::vector<int> ws;
        for (int w = 0; w <= weight_window(); ++w) ws.push_back(w);
        return ws;
    }

    int dim(int n, int w) const override {
        if (n < 0 || n > n_max_ || w < 0 || w > w_max_) return 0;
        return static_cast<int>(block(n, w).size());
    }

    SparseMatrix boundary(int n, int w) const override;
    SparseMatrix connes(int n, int w) const override;

    std::string basis_label(int n, int w, int idx) const override {
        const auto& blk = block(n, w);
        if (idx < 0 || idx >= static_cast<int>(blk.size())) return {};
        std::ostringstream os;
        for (size_t j = 0; j < blk[idx].size(); ++j) {
            if (j) os << "|";
            os << a_->labels[blk[idx][j]];
        }
        return os.str();
    }

    using Block = std::vector<Tuple>;

    const Block& block_at(int n, int w) const { return block(n, w); }
    static int find(const Block& blk, const Tuple& t);

private:
    const Block& block(int n, int w) const;

    AlgebraPtr a_;
    int n_max_, w_max_;
    bool graded_;
    std::vector<int> nonunit_;
    mutable std::map<std::pair<int, int>, Block> blocks_;
    mutable std::map<std::pair<int, int>, SparseMatrix> b_cache_, con_cache_;
};

const BarModel::Block& BarModel::block(int n, int w) const {
    auto it = blocks_.find({n, w});
    if (it != blocks_.end()) return it->second;

    Block blk;
    Tuple cur(n + 1);
    auto rec = [&](auto&& self, int slot, int budget) -> void {
        if (slot == n + 1) {
            if (budget == 0) blk.push_back(cur);
            return;
        }
        if (slot == 0) {
            for (int i = 0; i < a_->dim(); ++i)
                if (a_->weights[i] <= budget) {
                    cur[0] = i;
                    self(self, 1, budget - a_->weights[i]);
                }
        } else {
            for (int i : nonunit_)
                if (a_->weights[i] <= budget) {
                    cur[slot] = i;
                    self(self, slot + 1, budget - a_->weights[i]);
                }
        }
    };
    if (n >= 0 && w >= 0) rec(rec, 0, w);
    return blocks_.emplace(std::pair{n, w}, std::move(blk)).first->second;
}

int BarModel::find(const Block& blk, const Tuple& t) {
    auto it = std::lower_bound(blk.begin(), blk.end(), t);
    if (it == blk.end() || *it != t)
        throw IndexOutOfRange("bar chain outside the enumerated block");
    return static_cast<int>(it - blk.begin());
}

SparseMatrix BarModel::boundary(int n, int w) const {
    auto it = b_cache_.find({n, w});
    if (it != b_cache_.end()) return it->second;
    if (n < 1 || n > n_max_) return SparseMatrix(dim(n - 1, w), dim(n, w));

    const Block& src = block(n, w);
    const Block& dst = block(n - 1, w);
    SparseMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    Tuple out(n);
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
        const Tuple& t = src[c];
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            bool wrap = i == n;
            LinComb prod = wrap ? a_->mul_basis(t[n], t[0]) : a_->mul_basis(t[i], t[i + 1]);
            Rat sign((i % 2 == 0) ? 1 : -1);
            for (const auto& [k, coeff] : prod) {
                if (!wrap && i >= 1 && k == a_->unit) continue; // Abar slot
                if (wrap) {
                    out[0] = k;
                    std::copy(t.begin() + 1, t.begin() + n, out.begin() + 1);
                } else {
                    std::copy(t.begin(), t.begin() + i, out.begin());
                    out[i] = k;
                    std::copy(t.begin() + i + 2, t.end(), out.begin() + i + 1);
                }
                m.add(find(dst, out), c, sign * coeff);
            }
        }
    }
    return b_cache_.emplace(std::pair{n, w}, std::move(m)).first->second;
}

SparseMatrix BarModel::connes(int n, int w) const {
    if (n >= n_max_) throw OutsideSafeBand("B beyond the bar degree bound");
    auto it = con_cache_.find({n, w});
    if (it != con_cache_.end()) return it->second;
    if (n < 0) return SparseMatrix(dim(0, w), 0);

    const Block& src = block(n, w);
    const Block& dst = block(n + 1, w);
    SparseMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    Tuple out(n + 2);
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
        const Tuple& t = src[c];
        if (t[0] == a_->unit) continue;
        out[0] = a_->unit;
        for (int i = 0; i <= n; ++i) {
            Rat sign(((n * i) % 2 == 0) ? 1 : -1);
            for (int j = 0; j <= n; ++j) out[1 + j] = t[(i + j) % (n + 1)];
            m.add(find(dst, out), c, sign);
        }
    }
    return con_cache_.emplace(std::pair{n, w}, std::move(m)).first->second;
}

// Chain-level map induced by an algebra morphism between two bar models.
class InducedMap : public MixedMapModel {
public:
    InducedMap(AlgebraMorphism f, int n_max, int w_max) : f_(std::move(f)) {
        for (int i = 0; i < f_.source->dim(); ++i)
            for (const auto& [k, c] : f_.images[i])
                if (f_.target->weights[k] != f_.source->weights[i])
                    throw ValidationError("weight-shifting morphisms induce no blockwise chain map");
        int src_wmax = std::min(w_max, bar_weight_cap(*f_.source));
        int tgt_wmax = std::min(w_max, bar_weight_cap(*f_.target));
        src_ = std::make_shared<BarModel>(f_.source, n_max, src_wmax);
        tgt_ = std::make_shared<BarModel>(f_.target, n_max, tgt_wmax);
    }

    Mixed source() const override { return src_; }
    Mixed target() const override { return tgt_; }

    SparseMatrix block(int n, int w) const override {
        const auto& src_blk = src_->block_at(n, w);
        const auto& dst_blk = tgt_->block_at(n, w);
        SparseMatrix m(static_cast<int>(dst_blk.size()), static_cast<int>(src_blk.size()));
        Tuple out(n + 1);
        for (int c = 0; c < static_cast<int>(src_blk.size()); ++c) {
            const Tuple& t = src_blk[c];
            // expand the product of slotwise images
            auto rec = [&](auto&& self, int slot, const Rat& coeff) -> void {
                if (slot == n + 1) {
                    m.add(BarModel::find(dst_blk, out), c, coeff);
                    return;
                }
                for (const auto& [k, ck] : f_.images[t[slot]]) {
                    if (slot >= 1 && k == f_.target->unit) continue;
                    out[slot] = k;
                    self(self, slot + 1, coeff * ck);
                }
            };
            rec(rec, 0, Rat(1));
        }
        return m;
    }

private:
    AlgebraMorphism f_;
    std::shared_ptr<BarModel> src_, tgt_;
};

class IdentityMap : public MixedMapModel {
public:
    explicit IdentityMap(Mixed m) : m_(std::move(m)) {}
    Mixed source() const override { return m_; }
    Mixed target() const override { return m_; }
    SparseMatrix block(int n, int w) const override {
        return SparseMatrix::identity(m_->dim(n, w));
    }

private:
    Mixed m_;
};

} // namespace

Mixed bar_mixed(AlgebraPtr a, int n_max, int w_max) {
    auto bad = validate(*a);
    if (!bad.empty()) throw ValidationError("bar complex of an invalid algebra: " + bad.front());
    return std::make_shared<BarModel>(std::move(a), n_max, w_max);
}

int bar_weight_cap(const GradedAlgebra& a) {
    int cap = std::numeric_limits<int>::max();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == a.unit || j == a.unit) continue;
            int ws = a.weights[i] + a.weights[j];
            if (ws > a.window) cap = std::min(cap, ws - 1);
        }
    return cap;
}

MixedMap induced_mixed_map(const AlgebraMorphism& f, int n_max, int w_max) {
    return std::make_shared<InducedMap>(f, n_max, w_max);
}

MixedMap identity_mixed_map(Mixed m) { return std::make_shared<IdentityMap>(std::move(m)); }

std::vector<std::string> check_mixed_map(const MixedMap& f, int n_limit, int w_limit) {
    std::vector<std::string> bad;
    Mixed s = f->source(), t = f->target();
    int cap = std::min({n_limit, s->degree_cap(), t->degree_cap()});
    std::set<int> ws;
    for (int w : s->weights()) ws.insert(w);
    for (int w : t->weights()) ws.insert(w);
    for (int w : ws) {
        if (w > w_limit || w < -w_limit) continue;
        for (int n = 0; n <= cap; ++n) {
            if (n >= 1) {
                SparseMatrix lhs = t->boundary(n, w) * f->block(n, w);
                SparseMatrix rhs = f->block(n - 1, w) * s->boundary(n, w);
                if (!(lhs + (-rhs)).is_zero())
                    bad.push_back("map fails to commute with b at degree " + std::to_string(n) +
                                  ", weight " + std::to_string(w));
            }
            if (n + 1 <= cap) {
                SparseMatrix lhs = t->connes(n, w) * f->block(n, w);
                SparseMatrix rhs = f->block(n + 1, w) * s->connes(n, w);
                if (!(lhs + (-rhs)).is_zero())
                    bad.push_back("map fails to commute with B at degree " + std::to_string(n) +
                                  ", weight " + std::to_string(w));
            }
        }
    }
    return bad;
}

} // namespace cyclo
