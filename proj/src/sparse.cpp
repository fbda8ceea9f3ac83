#include "cyclo/sparse.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>

namespace cyclo {

SparseVec sv_axpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = c * b[j].second;
            if (!is_zero(v)) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rat v = a[i].second + c * b[j].second;
            if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, Rat(1), b); }

SparseVec sv_scale(const SparseVec& a, const Rat& c) {
    SparseVec out;
    if (is_zero(c)) return out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) out.emplace_back(i, c * v);
    return out;
}

bool sv_is_zero(const SparseVec& a) { return a.empty(); }

SparseVec sv_from_map(const std::map<int, Rat>& m) {
    SparseVec out;
    out.reserve(m.size());
    for (const auto& [i, v] : m)
        if (!is_zero(v)) out.emplace_back(i, v);
    return out;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
    return m;
}

void SparseMatrix::add(int r, int c, const Rat& v) {
    if (cyclo::is_zero(v)) return;
    auto& col = data_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        it->second += v;
        if (cyclo::is_zero(it->second)) col.erase(it);
    } else {
        col.insert(it, {r, v});
    }
}

void SparseMatrix::set_col(int c, SparseVec v) { data_.at(c) = std::move(v); }

Rat SparseMatrix::get(int r, int c) const {
    const auto& col = data_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return Rat(0);
}

bool SparseMatrix::is_zero() const {
    for (const auto& col : data_)
        if (!col.empty()) return false;
    return true;
}

int SparseMatrix::nnz() const {
    int n = 0;
    for (const auto& col : data_) n += static_cast<int>(col.size());
    return n;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols(), rows_);
    std::vector<int> counts(rows_, 0);
    for (const auto& col : data_)
        for (const auto& [r, v] : col) counts[r]++;
    for (int r = 0; r < rows_; ++r) t.data_[r].reserve(counts[r]);
    for (int c = 0; c < cols(); ++c)
        for (const auto& [r, v] : data_[c]) t.data_[r].emplace_back(c, v);
    return t;
}

void SparseMatrix::apply(const SparseVec& x, const Rat& c, std::map<int, Rat>& acc) const {
    for (const auto& [j, xv] : x) {
        Rat cv = c * xv;
        for (const auto& [i, mv] : data_[j]) {
            Rat& slot = acc[i];
            slot += cv * mv;
            if (cyclo::is_zero(slot)) acc.erase(i);
        }
    }
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols() != rhs.rows())
        throw IndexOutOfRange("matrix product shape mismatch");
    SparseMatrix out(rows_, rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) {
        std::map<int, Rat> acc;
        apply(rhs.data_[c], Rat(1), acc);
        out.data_[c] = sv_from_map(acc);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols())
        throw IndexOutOfRange("matrix sum shape mismatch");
    SparseMatrix out(rows_, cols());
    for (int c = 0; c < cols(); ++c) out.data_[c] = sv_add(data_[c], rhs.data_[c]);
    return out;
}

SparseMatrix SparseMatrix::operator-() const {
    SparseMatrix out(rows_, cols());
    for (int c = 0; c < cols(); ++c) out.data_[c] = sv_scale(data_[c], Rat(-1));
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
    return rows_ == rhs.rows_ && data_ == rhs.data_;
}

bool ColumnReducer::insert(SparseVec v, std::map<int, Rat>* dep) {
    std::map<int, Rat> comb;
    if (track_) comb[n_inserted_] = 1;
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) break;
        Rat factor = -v.front().second / it->second.vec.front().second;
        v = sv_axpy(v, factor, it->second.vec);
        if (track_)
            for (const auto& [k, c] : it->second.comb) {
                Rat& slot = comb[k];
                slot += factor * c;
                if (is_zero(slot)) comb.erase(k);
            }
    }
    ++n_inserted_;
    if (v.empty()) {
        if (dep) {
            // v = sum of earlier columns: flip the self coefficient over.
            dep->clear();
            for (const auto& [k, c] : comb)
                if (k != n_inserted_ - 1) (*dep)[k] = -c;
        }
        return false;
    }
    int pivot = v.front().first;
    pivots_.emplace(pivot, PivotRow{std::move(v), std::move(comb)});
    return true;
}

bool ColumnReducer::solve(SparseVec x, std::map<int, Rat>* coords) const {
    std::map<int, Rat> comb;
    while (!x.empty()) {
        auto it = pivots_.find(x.front().first);
        if (it == pivots_.end()) return false;
        Rat factor = -x.front().second / it->second.vec.front().second;
        x = sv_axpy(x, factor, it->second.vec);
        for (const auto& [k, c] : it->second.comb) {
            Rat& slot = comb[k];
            slot += factor * c;
            if (is_zero(slot)) comb.erase(k);
        }
    }
    if (coords) {
        coords->clear();
        for (const auto& [k, c] : comb) (*coords)[k] = -c;
    }
    return true;
}

bool ColumnReducer::in_span(SparseVec x) const {
    while (!x.empty()) {
        auto it = pivots_.find(x.front().first);
        if (it == pivots_.end()) return false;
        Rat factor = -x.front().second / it->second.vec.front().second;
        x = sv_axpy(x, factor, it->second.vec);
    }
    return true;
}

int rank(const SparseMatrix& m) {
    ColumnReducer red(false);
    for (int c = 0; c < m.cols(); ++c) red.insert(m.col(c));
    return red.rank();
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    ColumnReducer red(true);
    std::vector<SparseVec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        std::map<int, Rat> dep;
        if (!red.insert(m.col(c), &dep)) {
            dep[c] = -1;
            basis.push_back(sv_scale(sv_from_map(dep), Rat(-1)));
        }
    }
    return basis;
}

int kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }

int homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw IndexOutOfRange("homology_dim: middle dimensions disagree");
    if (!(d_out * d_in).is_zero())
        throw CompositionNonzero("d_out * d_in != 0");
    return kernel_dim(d_out) - rank(d_in);
}

} // namespace cyclo
