#include "cyclo/mixed.hpp"
#include "cyclo/errors.hpp"

#include <set>
#include <sstream>

namespace cyclo {

std::string MixedModel::basis_label(int, int, int) const { return {}; }

void GenericMixed::set_dim(int n, int w, int d) {
    if (d != 0) dims_[{n, w}] = d;
}

void GenericMixed::set_boundary(int n, int w, SparseMatrix m) { b_[{n, w}] = std::move(m); }
void GenericMixed::set_connes(int n, int w, SparseMatrix m) { con_[{n, w}] = std::move(m); }
void GenericMixed::set_label(int n, int w, std::vector<std::string> labels) {
    labels_[{n, w}] = std::move(labels);
}

std::vector<int> GenericMixed::weights() const {
    std::set<int> ws;
    for (const auto& [k, d] : dims_) ws.insert(k.second);
    return {ws.begin(), ws.end()};
}

int GenericMixed::dim(int n, int w) const {
    auto it = dims_.find({n, w});
    return it == dims_.end() ? 0 : it->second;
}

SparseMatrix GenericMixed::boundary(int n, int w) const {
    auto it = b_.find({n, w});
    if (it != b_.end()) return it->second;
    return SparseMatrix(dim(n - 1, w), dim(n, w));
}

SparseMatrix GenericMixed::connes(int n, int w) const {
    if (n >= cap_) throw OutsideSafeBand("B_" + std::to_string(n) + " beyond the degree cap");
    auto it = con_.find({n, w});
    if (it != con_.end()) return it->second;
    return SparseMatrix(dim(n + 1, w), dim(n, w));
}

std::string GenericMixed::basis_label(int n, int w, int idx) const {
    auto it = labels_.find({n, w});
    if (it == labels_.end() || idx < 0 || idx >= static_cast<int>(it->second.size())) return {};
    return it->second[idx];
}

Mixed de_rham_model(DeRhamKind kind, int w_max) {
    bool laurent = kind == DeRhamKind::Laurent;
    auto m = std::make_shared<GenericMixed>(
        laurent ? "deRham(k[t,1/t])" : "deRham(k[t])", 64, w_max);
    int lo = laurent ? -w_max : 0;
    for (int w = lo; w <= w_max; ++w) {
        // forms t^w (degree 0) and t^{w-1} dt (degree 1), each a line
        m->set_dim(0, w, 1);
        m->set_label(0, w, {w == 0 ? "1" : "t^" + std::to_string(w)});
        bool has_form = laurent || w >= 1;
        if (has_form) {
            m->set_dim(1, w, 1);
            m->set_label(1, w, {"t^" + std::to_string(w - 1) + " dt"});
            SparseMatrix B(1, 1);
            B.add(0, 0, Rat(w));
            m->set_connes(0, w, std::move(B));
        }
    }
    return m;
}

namespace {

class SuspendModel : public MixedModel {
public:
    explicit SuspendModel(Mixed base) : base_(std::move(base)) {}
    std::string name() const override { return "suspend(" + base_->name() + ")"; }
    int degree_cap() const override { return base_->degree_cap() + 1; }
    std::vector<int> weights() const override { return base_->weights(); }
    int weight_window() const override { return base_->weight_window(); }
    int dim(int n, int w) const override { return n >= 1 ? base_->dim(n - 1, w) : 0; }
    SparseMatrix boundary(int n, int w) const override {
        if (n < 1) return SparseMatrix(0, 0);
        return -base_->boundary(n - 1, w);
    }
    SparseMatrix connes(int n, int w) const override {
        if (n < 1) return SparseMatrix(base_->dim(0, w), 0);
        return -base_->connes(n - 1, w);
    }
    std::string basis_label(int n, int w, int idx) const override {
        return n >= 1 ? base_->basis_label(n - 1, w, idx) : std::string{};
    }

private:
    Mixed base_;
};

} // namespace

Mixed suspend(Mixed m) { return std::make_shared<SuspendModel>(std::move(m)); }

std::vector<std::string> check_mixed_relations(const Mixed& m, int n_limit, int w_limit) {
    std::vector<std::string> bad;
    int cap = std::min(n_limit, m->degree_cap());
    auto note = [&bad, &m](const std::string& rel, int n, int w) {
        std::ostringstream os;
        os << rel << " != 0 on " << m->name() << " at degree " << n << ", weight " << w;
        bad.push_back(os.str());
    };
    for (int w : m->weights()) {
        if (w > w_limit || w < -w_limit) continue;
        for (int n = 0; n <= cap; ++n) {
            if (m->dim(n, w) == 0) continue;
            if (n >= 2 && !(m->boundary(n - 1, w) * m->boundary(n, w)).is_zero())
                note("b^2", n, w);
            if (n + 2 <= cap && !(m->connes(n + 1, w) * m->connes(n, w)).is_zero())
                note("B^2", n, w);
            if (n + 1 <= cap) {
                SparseMatrix anti = m->boundary(n + 1, w) * m->connes(n, w);
                if (n >= 1) anti = anti + m->connes(n - 1, w) * m->boundary(n, w);
                if (!anti.is_zero()) note("bB + Bb", n, w);
            }
        }
    }
    return bad;
}

} // namespace cyclo
