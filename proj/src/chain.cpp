#include "cyclo/chain.hpp"
#include "cyclo/errors.hpp"

#include <set>

namespace cyclo {

int ChainComplex::dim(int n, int w) const {
    auto it = dims.find({n, w});
    return it == dims.end() ? 0 : it->second;
}

SparseMatrix ChainComplex::d(int n, int w) const {
    auto it = diff.find({n, w});
    if (it != diff.end()) return it->second;
    return SparseMatrix(dim(n - 1, w), dim(n, w));
}

std::vector<int> ChainComplex::weights() const {
    std::set<int> ws;
    for (const auto& [k, v] : dims) ws.insert(k.second);
    return {ws.begin(), ws.end()};
}

std::vector<std::string> ChainComplex::check() const {
    std::vector<std::string> bad;
    for (int w : weights())
        for (int n = 2; n <= degree_cap; ++n)
            if (dim(n, w) && !(d(n - 1, w) * d(n, w)).is_zero())
                bad.push_back(name + ": d^2 != 0 at degree " + std::to_string(n) + ", weight " +
                              std::to_string(w));
    return bad;
}

ChainComplex underlying_complex(const Mixed& m, int up_to) {
    ChainComplex c;
    c.name = "underlying(" + m->name() + ")";
    c.degree_cap = std::min(up_to, m->degree_cap());
    for (int w : m->weights())
        for (int n = 0; n <= c.degree_cap; ++n) {
            int d = m->dim(n, w);
            if (!d) continue;
            c.dims[{n, w}] = d;
            if (n >= 1) c.diff[{n, w}] = m->boundary(n, w);
        }
    return c;
}

SparseMatrix ChainMap::block(int n, int w) const {
    auto it = blocks.find({n, w});
    if (it != blocks.end()) return it->second;
    return SparseMatrix(target.dim(n, w), source.dim(n, w));
}

void check_chain_map(const ChainMap& f) {
    int cap = std::min(f.source.degree_cap, f.target.degree_cap);
    std::set<int> ws;
    for (int w : f.source.weights()) ws.insert(w);
    for (int w : f.target.weights()) ws.insert(w);
    for (int w : ws)
        for (int n = 1; n <= cap; ++n) {
            SparseMatrix lhs = f.target.d(n, w) * f.block(n, w);
            SparseMatrix rhs = f.block(n - 1, w) * f.source.d(n, w);
            if (!(lhs + (-rhs)).is_zero())
                throw NotChainMap("map fails to commute with d at degree " + std::to_string(n) +
                                  ", weight " + std::to_string(w));
        }
}

ChainComplex cone(const ChainMap& f) {
    check_chain_map(f);
    const ChainComplex& s = f.source;
    const ChainComplex& t = f.target;
    ChainComplex c;
    c.name = "cone";
    c.degree_cap = std::min(s.degree_cap + 1, t.degree_cap);
    std::set<int> ws;
    for (int w : s.weights()) ws.insert(w);
    for (int w : t.weights()) ws.insert(w);
    for (int w : ws)
        for (int n = 0; n <= c.degree_cap; ++n) {
            int ds = s.dim(n - 1, w), dt = t.dim(n, w);
            if (ds + dt == 0) continue;
            c.dims[{n, w}] = ds + dt;
            int rs = s.dim(n - 2, w), rt = t.dim(n - 1, w);
            SparseMatrix m(rs + rt, ds + dt);
            if (n >= 1) {
                SparseMatrix dsm = s.d(n - 1, w);
                for (int col = 0; col < ds; ++col)
                    for (const auto& [r, v] : dsm.col(col)) m.add(r, col, -v);
                SparseMatrix fm = f.block(n - 1, w);
                for (int col = 0; col < ds; ++col)
                    for (const auto& [r, v] : fm.col(col)) m.add(rs + r, col, -v);
                SparseMatrix dtm = t.d(n, w);
                for (int col = 0; col < dt; ++col)
                    for (const auto& [r, v] : dtm.col(col)) m.add(rs + r, ds + col, v);
            }
            c.diff[{n, w}] = std::move(m);
        }
    auto bad = c.check();
    if (!bad.empty()) throw CompositionNonzero(bad.front());
    return c;
}

int chain_homology(const ChainComplex& c, int n, int w) {
    if (n < 0 || n + 1 > c.degree_cap)
        throw OutsideSafeBand("homology degree outside the represented band");
    return homology_dim(c.d(n + 1, w), c.d(n, w));
}

int chain_homology_total(const ChainComplex& c, int n) {
    int total = 0;
    for (int w : c.weights()) total += chain_homology(c, n, w);
    return total;
}

} // namespace cyclo
