#pragma once
#include "cyclo/mixed.hpp"

#include <map>

namespace cyclo {

struct HpParams {
    int n_max = 8;
    int w_max = 6;
    int columns = 6;
};

// Even/odd periodic cyclic dimensions with stabilization metadata. The
// engine ladders the truncation level and certifies convergence by equality
// of two consecutive levels, per weight.
struct HPReport {
    int even = 0, odd = 0;
    bool stabilized = false;
    int n_max = 0, w_max = 0, columns = 0; // requested truncation
    int band = 0;                          // final level: degrees [0, band] used
    std::map<int, std::pair<int, int>> per_weight;

    std::pair<int, int> dims() const { return {even, odd}; }
};

// Hochschild homology of the underlying b-complex at degree n.
int hochschild(const Mixed& m, int n);
std::map<int, int> hochschild_per_weight(const Mixed& m, int n);

// Cyclic homology from the staircase bicomplex total complex at degree n,
// keeping column indices 0..columns. Requires columns >= ceil(n/2)+1 so the
// staircase at degrees n-1..n+1 is complete.
int cyclic(const Mixed& m, int n, int columns);

HPReport periodic(const Mixed& m, const HpParams& p);

struct MapOnHp {
    HPReport source, target;
    int rank_even = 0, rank_odd = 0;
    // homology dimensions at the common comparison level
    int src_even = 0, src_odd = 0, tgt_even = 0, tgt_odd = 0;
    bool is_iso = false;
};

// Ranks of the induced maps on HP; throws NotStabilized unless both ends
// carry stabilized reports.
MapOnHp hp_of_map(const MixedMap& f, const HpParams& p);

} // namespace cyclo
