#pragma once
#include "cyclo/mixed.hpp"
#include "cyclo/sparse.hpp"

#include <map>

namespace cyclo {

// Bounded chain complex with weight-graded blocks and degree -1 differential.
struct ChainComplex {
    std::string name;
    int degree_cap = 0;
    std::map<std::pair<int, int>, int> dims;          // (n, w) -> dim
    std::map<std::pair<int, int>, SparseMatrix> diff; // d_n : (n, w) -> (n-1, w)

    int dim(int n, int w) const;
    SparseMatrix d(int n, int w) const; // zero matrix when absent
    std::vector<int> weights() const;

    // b o b = 0 everywhere in range; violations reported.
    std::vector<std::string> check() const;
};

// The b-complex underlying a mixed complex, materialized up to a degree.
ChainComplex underlying_complex(const Mixed& m, int up_to);

// Degreewise map commuting with the differentials.
struct ChainMap {
    ChainComplex source, target;
    std::map<std::pair<int, int>, SparseMatrix> blocks; // (n, w) -> matrix

    SparseMatrix block(int n, int w) const;
};

// Throws NotChainMap if f does not commute with the differentials.
void check_chain_map(const ChainMap& f);

// Standard cone: degree n is source(n-1) + target(n); differential
// (x, y) -> (-d x, d y - f x). The result satisfies d o d = 0 (checked).
ChainComplex cone(const ChainMap& f);

// Homology dimension of the b-complex at (n, w).
int chain_homology(const ChainComplex& c, int n, int w);
int chain_homology_total(const ChainComplex& c, int n);

} // namespace cyclo
