#include "cyclo/homology.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace cyclo {

namespace {

std::vector<int> weights_in_window(const Mixed& m, int w_max) {
    std::vector<int> ws;
    for (int w : m->weights())
        if (w >= -w_max && w <= w_max) ws.push_back(w);
    return ws;
}

// Blockwise relation guard covering everything a staircase through degree
// `top` assembles. Lower degrees are covered by earlier calls.
void check_relations_at(const Mixed& m, int top, int w) {
    if (top >= 2 && m->dim(top, w) &&
        !(m->boundary(top - 1, w) * m->boundary(top, w)).is_zero())
        throw CompositionNonzero("b^2 != 0 at degree " + std::to_string(top) + ", weight " +
                                 std::to_string(w) + " on " + m->name());
    if (top >= 1 && m->dim(top - 1, w)) {
        SparseMatrix anti = m->boundary(top, w) * m->connes(top - 1, w);
        if (top >= 2) anti = anti + m->connes(top - 2, w) * m->boundary(top - 1, w);
        if (!anti.is_zero())
            throw CompositionNonzero("bB + Bb != 0 at degree " + std::to_string(top - 1) +
                                     ", weight " + std::to_string(w) + " on " + m->name());
    }
    if (top >= 2 && m->dim(top - 2, w) &&
        !(m->connes(top - 1, w) * m->connes(top - 2, w)).is_zero())
        throw CompositionNonzero("B^2 != 0 at degree " + std::to_string(top - 2) + ", weight " +
                                 std::to_string(w) + " on " + m->name());
}

// Staircase total complex: Tot_k = C_k + C_{k-2} + ..., pieces listed from
// degree k downward, with B dropped off the leading piece. The total
// differential squares to zero because the blockwise relations hold.
struct StaircaseLayout {
    std::vector<std::pair<int, int>> pieces; // (degree, offset), degree descending
    int dim = 0;
};

StaircaseLayout staircase_layout(const Mixed& m, int w, int k) {
    StaircaseLayout lay;
    for (int deg = k; deg >= 0; deg -= 2) {
        lay.pieces.emplace_back(deg, lay.dim);
        lay.dim += m->dim(deg, w);
    }
    return lay;
}

SparseMatrix staircase_d(const Mixed& m, int w, int k) {
    StaircaseLayout src = staircase_layout(m, w, k);
    StaircaseLayout dst = staircase_layout(m, w, k - 1);
    SparseMatrix d(dst.dim, src.dim);
    auto dst_offset = [&dst](int degree) {
        for (auto& [deg, off] : dst.pieces)
            if (deg == degree) return off;
        return -1;
    };
    for (size_t p = 0; p < src.pieces.size(); ++p) {
        auto [deg, off] = src.pieces[p];
        int cols = m->dim(deg, w);
        if (!cols) continue;
        if (deg >= 1) {
            int o = dst_offset(deg - 1);
            if (o >= 0) {
                SparseMatrix b = m->boundary(deg, w);
                for (int c = 0; c < cols; ++c)
                    for (const auto& [r, v] : b.col(c)) d.add(o + r, off + c, v);
            }
        }
        if (p >= 1) { // the leading piece has no outgoing B
            int o = dst_offset(deg + 1);
            if (o >= 0) {
                SparseMatrix B = m->connes(deg, w);
                for (int c = 0; c < cols; ++c)
                    for (const auto& [r, v] : B.col(c)) d.add(o + r, off + c, v);
            }
        }
    }
    return d;
}

int rank_econ(const SparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return m.cols() <= m.rows() ? rank(m) : rank(m.transpose());
}

// Staircase readings of one weight piece, with lazily materialized homology
// representatives; serves the ladders of both parities.
class StairTower {
public:
    StairTower(Mixed m, int w) : m_(std::move(m)), w_(w) {}

    // guards relations up to `top` once
    void ensure_relations(int top) {
        for (; checked_ <= top; ++checked_) check_relations_at(m_, checked_, w_);
    }

    int dim_h(int k) {
        auto it = dims_.find(k);
        if (it != dims_.end()) return it->second;
        ensure_relations(k + 1);
        int tot = staircase_layout(m_, w_, k).dim;
        int d = 0;
        if (tot) {
            d = tot - rank_econ(staircase_d(m_, w_, k)) - rank_econ(staircase_d(m_, w_, k + 1));
        }
        dims_[k] = d;
        return d;
    }

    struct Reps {
        std::vector<SparseVec> reps;
        ColumnReducer span{true}; // boundaries first, then representatives
        std::vector<int> rep_slot;
    };

    const Reps& reps(int k) {
        auto it = reps_.find(k);
        if (it != reps_.end()) return it->second;
        ensure_relations(k + 1);
        Reps r;
        SparseMatrix d_in = staircase_d(m_, w_, k + 1);
        int boundary_rank = rank_econ(d_in);
        for (int c = 0; c < d_in.cols() && r.span.rank() < boundary_rank; ++c)
            r.span.insert(d_in.col(c));
        for (auto& z : kernel_basis(staircase_d(m_, w_, k))) {
            int slot = r.span.inserted();
            if (r.span.insert(z)) {
                r.reps.push_back(std::move(z));
                r.rep_slot.push_back(slot);
            }
        }
        // cross-check against the rank-based count when both were computed
        auto cached = dims_.find(k);
        if (cached != dims_.end() && cached->second != static_cast<int>(r.reps.size()))
            throw CompositionNonzero("homology dimension disagreement between rank and "
                                     "representative computations");
        dims_[k] = static_cast<int>(r.reps.size());
        return reps_.emplace(k, std::move(r)).first->second;
    }

    // Periodicity projection on homology: drop the leading staircase piece.
    // Returns a (dim H_{k-2}) x (dim H_k) matrix.
    SparseMatrix s_matrix(int k) {
        const Reps& from = reps(k);
        const Reps& to = reps(k - 2);
        int drop = m_->dim(k, w_);
        SparseMatrix s(static_cast<int>(to.reps.size()), static_cast<int>(from.reps.size()));
        for (size_t j = 0; j < from.reps.size(); ++j) {
            SparseVec image;
            for (const auto& [i, c] : from.reps[j])
                if (i >= drop) image.emplace_back(i - drop, c);
            std::map<int, Rat> coords;
            if (!to.span.solve(image, &coords))
                throw CompositionNonzero("projected cycle escapes the smaller staircase");
            for (size_t i = 0; i < to.rep_slot.size(); ++i) {
                auto it2 = coords.find(to.rep_slot[i]);
                if (it2 != coords.end()) s.add(static_cast<int>(i), static_cast<int>(j), it2->second);
            }
        }
        return s;
    }

    const Mixed& model() const { return m_; }
    int weight() const { return w_; }

private:
    Mixed m_;
    int w_;
    int checked_ = 0;
    std::map<int, int> dims_;
    std::map<int, Reps> reps_;
};

struct ParityResult {
    int dim = 0;
    bool stabilized = false;
    int band = 0;
};

// For a weight piece supported in degrees <= d_sup with visible headroom
// below the cap, every staircase from d_sup on contains the whole (finite)
// complex: one reading is exact and final.
ParityResult exact_reading(StairTower& tower, int parity, int d_sup) {
    ParityResult out;
    int k = std::max(parity, d_sup + ((d_sup % 2 == parity % 2) ? 0 : 1));
    out.dim = tower.dim_h(k);
    out.stabilized = true;
    out.band = k;
    return out;
}

// Ladders staircase readings k = parity, parity+2, ... and certifies once the
// rank of the periodicity projection is constant across two consecutive
// steps and their composite, with equal dimensions at the compared levels.
// Two consecutive zero readings certify a vanishing dimension without
// materializing anything above them; a transient zero certifies nothing.
ParityResult parity_ladder(StairTower& tower, int parity, int cap) {
    ParityResult out;
    std::optional<SparseMatrix> s_prev;
    std::optional<int> rank_prev;

    for (int k = parity + 2; k + 1 <= cap; k += 2) {
        out.band = k;
        if (k >= parity + 4 && tower.dim_h(k - 2) == 0 && tower.dim_h(k - 4) == 0) {
            out.dim = 0;
            out.stabilized = true;
            return out;
        }
        if (tower.dim_h(k - 2) == 0) { // nothing cheap to compare against
            rank_prev = 0;
            out.dim = 0;
            s_prev.reset();
            continue;
        }
        int r;
        std::optional<SparseMatrix> s_cur;
        if (tower.dim_h(k) == 0) {
            r = 0;
        } else {
            s_cur = tower.s_matrix(k);
            r = rank(*s_cur);
        }
        if (rank_prev && s_prev && s_cur && tower.dim_h(k) == tower.dim_h(k - 2) &&
            r == *rank_prev && rank(*s_prev * *s_cur) == r) {
            out.dim = r;
            out.stabilized = true;
            return out;
        }
        rank_prev = r;
        out.dim = r;
        s_prev = std::move(s_cur);
    }
    return out;
}

int ladder_cap(const Mixed& m, const HpParams& p) {
    return std::min({p.n_max, m->degree_cap(), 2 * p.columns + 1});
}

} // namespace

int hochschild(const Mixed& m, int n) {
    int total = 0;
    for (auto& [w, d] : hochschild_per_weight(m, n)) total += d;
    return total;
}

std::map<int, int> hochschild_per_weight(const Mixed& m, int n) {
    if (n < 0 || n + 1 > m->degree_cap())
        throw OutsideSafeBand("Hochschild degree outside the represented band");
    std::map<int, int> out;
    for (int w : m->weights()) {
        if (m->dim(n, w) == 0) continue;
        int h = homology_dim(m->boundary(n + 1, w), m->boundary(n, w));
        if (h) out[w] = h;
    }
    return out;
}

int cyclic(const Mixed& m, int n, int columns) {
    if (n < 0) throw OutsideSafeBand("negative degree");
    if (columns < (n + 1) / 2 + 1)
        throw OutsideSafeBand("column truncation too small for degree " + std::to_string(n));
    if (n + 1 > m->degree_cap())
        throw OutsideSafeBand("cyclic degree outside the represented band");

    int total = 0;
    for (int w : m->weights()) {
        if (staircase_layout(m, w, n).dim == 0) continue;
        for (int top = 0; top <= n + 1; ++top) check_relations_at(m, top, w);
        total += homology_dim(staircase_d(m, w, n + 1), staircase_d(m, w, n));
    }
    return total;
}

HPReport periodic(const Mixed& m, const HpParams& p) {
    HPReport rep;
    rep.n_max = p.n_max;
    rep.w_max = p.w_max;
    rep.columns = p.columns;

    int cap = ladder_cap(m, p);
    if (cap < 5) throw OutsideSafeBand("truncation too small for a stabilization ladder");

    rep.stabilized = true;
    for (int w : weights_in_window(m, p.w_max)) {
        int d_sup = -1;
        for (int n = 0; n <= cap; ++n)
            if (m->dim(n, w) > 0) d_sup = n;
        if (d_sup < 0) continue;
        StairTower tower(m, w);
        ParityResult even, odd;
        if (d_sup <= cap - 2) {
            // the weight piece is a finite complex inside the window
            even = exact_reading(tower, 0, d_sup);
            odd = exact_reading(tower, 1, d_sup);
        } else {
            even = parity_ladder(tower, 0, cap);
            odd = parity_ladder(tower, 1, cap);
        }
        rep.stabilized &= even.stabilized && odd.stabilized;
        rep.band = std::max({rep.band, even.band, odd.band});
        if (even.dim || odd.dim) {
            rep.per_weight[w] = {even.dim, odd.dim};
            rep.even += even.dim;
            rep.odd += odd.dim;
        }
    }
    return rep;
}

MapOnHp hp_of_map(const MixedMap& f, const HpParams& p) {
    MapOnHp out;
    Mixed src = f->source(), tgt = f->target();
    out.source = periodic(src, p);
    out.target = periodic(tgt, p);
    if (!out.source.stabilized || !out.target.stabilized)
        throw NotStabilized("periodic dimensions did not stabilize on both ends");

    int cap = std::min(ladder_cap(src, p), ladder_cap(tgt, p));
    auto bad = check_mixed_map(f, cap, p.w_max);
    if (!bad.empty()) throw ValidationError("induced map: " + bad.front());

    out.src_even = out.source.even;
    out.src_odd = out.source.odd;
    out.tgt_even = out.target.even;
    out.tgt_odd = out.target.odd;

    std::set<int> wset;
    for (int w : weights_in_window(src, p.w_max)) wset.insert(w);
    for (int w : weights_in_window(tgt, p.w_max)) wset.insert(w);

    for (int w : wset) {
        StairTower ts(src, w), tt(tgt, w);
        for (int parity : {0, 1}) {
            // rank of (project o induced) from the source reading at k_src to
            // the target reading two steps below; factors through the stable
            // images once both towers are certified
            int k_tgt = cap - 1 - ((cap - 1 - parity) % 2) - 2;
            int k_src = k_tgt + 2;
            if (k_tgt < parity) continue;
            int& rank_slot = parity == 0 ? out.rank_even : out.rank_odd;
            bool src_zero = true, tgt_zero = true;
            for (int n = 0; n <= k_src + 1 && (src_zero || tgt_zero); ++n) {
                src_zero &= src->dim(n, w) == 0;
                tgt_zero &= tgt->dim(n, w) == 0;
            }
            if (src_zero || tgt_zero) continue;
            if (ts.dim_h(k_src) == 0 || tt.dim_h(k_tgt) == 0) continue;

            const StairTower::Reps& hs = ts.reps(k_src);
            const StairTower::Reps& ht = tt.reps(k_tgt);

            // piecewise transport: degree d piece of the source staircase at
            // k_src maps by f to the degree d piece of the target staircase
            // at k_tgt (the leading source piece is projected away)
            StaircaseLayout src_lay = staircase_layout(src, w, k_src);
            StaircaseLayout tgt_lay = staircase_layout(tgt, w, k_tgt);
            auto tgt_offset = [&tgt_lay](int degree) {
                for (auto& [deg, off] : tgt_lay.pieces)
                    if (deg == degree) return off;
                return -1;
            };
            SparseMatrix induced(static_cast<int>(ht.reps.size()),
                                 static_cast<int>(hs.reps.size()));
            std::map<int, SparseMatrix> fblock;
            for (auto& [deg, off] : tgt_lay.pieces) fblock.emplace(deg, f->block(deg, w));
            for (size_t j = 0; j < hs.reps.size(); ++j) {
                std::map<int, Rat> acc;
                size_t piece = 0;
                for (const auto& [idx, c] : hs.reps[j]) {
                    while (piece + 1 < src_lay.pieces.size() &&
                           idx >= src_lay.pieces[piece + 1].second)
                        ++piece;
                    auto [deg, off] = src_lay.pieces[piece];
                    int toff = tgt_offset(deg);
                    if (toff < 0) continue; // the leading piece is dropped
                    for (const auto& [r, v] : fblock.at(deg).col(idx - off)) {
                        Rat& cell = acc[toff + r];
                        cell += c * v;
                        if (is_zero(cell)) acc.erase(toff + r);
                    }
                }
                std::map<int, Rat> coords;
                if (!ht.span.solve(sv_from_map(acc), &coords))
                    throw CompositionNonzero("image of a cycle is not a cycle modulo boundaries");
                for (size_t i = 0; i < ht.rep_slot.size(); ++i) {
                    auto it2 = coords.find(ht.rep_slot[i]);
                    if (it2 != coords.end())
                        induced.add(static_cast<int>(i), static_cast<int>(j), it2->second);
                }
            }
            rank_slot += rank(induced);
        }
    }

    out.is_iso = out.rank_even == out.src_even && out.rank_even == out.tgt_even &&
                 out.rank_odd == out.src_odd && out.rank_odd == out.tgt_odd;
    return out;
}

} // namespace cyclo
