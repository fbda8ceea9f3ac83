#pragma once
#include "cyclo/rat.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cyclo {

// Sparse column: (index, value) pairs, sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_axpy(const SparseVec& a, const Rat& c, const SparseVec& b); // a + c*b
SparseVec sv_scale(const SparseVec& a, const Rat& c);
bool sv_is_zero(const SparseVec& a);

// Column-major sparse matrix with exact rational entries.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), data_(cols) {}

    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(data_.size()); }

    void add(int r, int c, const Rat& v);       // accumulate (v may cancel an entry)
    void set_col(int c, SparseVec v);
    const SparseVec& col(int c) const { return data_[c]; }
    Rat get(int r, int c) const;

    bool is_zero() const;
    int nnz() const;

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix operator-() const;

    // y += c * (this * x), x given as sparse column.
    void apply(const SparseVec& x, const Rat& c, std::map<int, Rat>& acc) const;

    bool operator==(const SparseMatrix& rhs) const;

private:
    int rows_;
    std::vector<SparseVec> data_;
};

SparseVec sv_from_map(const std::map<int, Rat>& m);

// Incremental exact Gaussian elimination over Q. Columns are inserted one at
// a time; each either extends the pivot set or yields a dependency whose
// coefficients are tracked.
class ColumnReducer {
public:
    explicit ColumnReducer(bool track = false) : track_(track) {}

    // Returns true if v was independent (new pivot). When tracking and v is
    // dependent, *dep receives coefficients c_i over previously *inserted*
    // columns (by insertion order) with v = sum c_i * col_i.
    bool insert(SparseVec v, std::map<int, Rat>* dep = nullptr);

    // Expresses x in the span of the inserted columns; returns false if x is
    // not in the span. Requires tracking. Does not modify the pivot set.
    bool solve(SparseVec x, std::map<int, Rat>* coords) const;

    bool in_span(SparseVec x) const;

    int rank() const { return static_cast<int>(pivots_.size()); }
    int inserted() const { return n_inserted_; }

private:
    struct PivotRow {
        SparseVec vec;              // pivot entry first (lowest index)
        std::map<int, Rat> comb;    // expression over inserted columns
    };
    bool track_;
    int n_inserted_ = 0;
    std::map<int, PivotRow> pivots_; // keyed by pivot index
};

int rank(const SparseMatrix& m);
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);
int kernel_dim(const SparseMatrix& m);

// dim ker(d_out) - rank(d_in) for consecutive differentials; throws
// CompositionNonzero when d_out * d_in != 0.
int homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

} // namespace cyclo
