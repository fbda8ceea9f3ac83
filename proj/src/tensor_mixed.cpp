#include "cyclo/mixed.hpp"
#include "cyclo/errors.hpp"

#include <set>

namespace cyclo {

namespace {

// Koszul-signed tensor product: on x (x) y both operators act as
// op(x) (x) y + (-1)^{deg x} x (x) op(y).
class TensorModel : public MixedModel {
public:
    TensorModel(Mixed a, Mixed b) : a_(std::move(a)), b_(std::move(b)) {}

    std::string name() const override { return a_->name() + " (x) " + b_->name(); }
    int degree_cap() const override { return std::min(a_->degree_cap(), b_->degree_cap()); }
    int weight_window() const override { return a_->weight_window() + b_->weight_window(); }

    std::vector<int> weights() const override {
        std::set<int> ws;
        for (int u : a_->weights())
            for (int v : b_->weights()) ws.insert(u + v);
        return {ws.begin(), ws.end()};
    }

    int dim(int n, int w) const override { return layout(n, w).total; }
    SparseMatrix boundary(int n, int w) const override { return assemble(n, w, false); }
    SparseMatrix connes(int n, int w) const override {
        if (n >= degree_cap()) throw OutsideSafeBand("B beyond the tensor degree bound");
        return assemble(n, w, true);
    }

    std::string basis_label(int n, int w, int idx) const override {
        const Layout& lay = layout(n, w);
        for (const auto& s : lay.parts) {
            if (idx < s.offset || idx >= s.offset + s.d1 * s.d2) continue;
            int p = (idx - s.offset) / s.d2, q = (idx - s.offset) % s.d2;
            return a_->basis_label(s.i, s.u, p) + " (x) " + b_->basis_label(n - s.i, w - s.u, q);
        }
        return {};
    }

private:
    struct Part {
        int i, u;     // factor-1 degree and weight
        int d1, d2;   // block dims of the two factors
        int offset;   // starting index inside the tensor block
    };
    struct Layout {
        std::vector<Part> parts;
        int total = 0;
        int index(int i, int u) const { // offset of part (i, u); -1 if absent
            for (const auto& p : parts)
                if (p.i == i && p.u == u) return p.offset;
            return -1;
        }
    };

    const Layout& layout(int n, int w) const {
        auto it = layouts_.find({n, w});
        if (it != layouts_.end()) return it->second;
        Layout lay;
        if (n >= 0) {
            for (int i = 0; i <= n; ++i)
                for (int u : a_->weights()) {
                    int d1 = a_->dim(i, u);
                    if (d1 == 0) continue;
                    int d2 = b_->dim(n - i, w - u);
                    if (d2 == 0) continue;
                    lay.parts.push_back({i, u, d1, d2, lay.total});
                    lay.total += d1 * d2;
                }
        }
        return layouts_.emplace(std::pair{n, w}, std::move(lay)).first->second;
    }

    SparseMatrix assemble(int n, int w, bool connes_op) const {
        const Layout& src = layout(n, w);
        const Layout& dst = layout(n + (connes_op ? 1 : -1), w);
        SparseMatrix m(dst.total, src.total);
        for (const auto& part : src.parts) {
            int j = n - part.i, v = w - part.u;
            // factor-1 operator (x) id
            {
                SparseMatrix op = connes_op ? a_->connes(part.i, part.u) : a_->boundary(part.i, part.u);
                int ti = part.i + (connes_op ? 1 : -1);
                int off = dst.index(ti, part.u);
                if (off >= 0 && op.rows() > 0)
                    for (int p = 0; p < part.d1; ++p)
                        for (const auto& [r, val] : op.col(p))
                            for (int q = 0; q < part.d2; ++q)
                                m.add(off + r * part.d2 + q, part.offset + p * part.d2 + q, val);
            }
            // (-1)^i id (x) factor-2 operator
            {
                SparseMatrix op = connes_op ? b_->connes(j, v) : b_->boundary(j, v);
                int tj = j + (connes_op ? 1 : -1);
                int off = dst.index(part.i, part.u);
                Rat sign((part.i % 2 == 0) ? 1 : -1);
                if (off >= 0 && op.rows() > 0) {
                    int d2t = b_->dim(tj, v);
                    for (int q = 0; q < part.d2; ++q)
                        for (const auto& [r, val] : op.col(q))
                            for (int p = 0; p < part.d1; ++p)
                                m.add(off + p * d2t + r, part.offset + p * part.d2 + q, sign * val);
                }
            }
        }
        return m;
    }

    Mixed a_, b_;
    mutable std::map<std::pair<int, int>, Layout> layouts_;
};

} // namespace

Mixed tensor_mixed(Mixed a, Mixed b) {
    return std::make_shared<TensorModel>(std::move(a), std::move(b));
}

} // namespace cyclo
