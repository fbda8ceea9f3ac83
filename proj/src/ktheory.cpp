#include "cyclo/ktheory.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>

namespace cyclo {

int FreeComplex::rank_at(int n) const {
    auto it = ranks.find(n);
    return it == ranks.end() ? 0 : it->second;
}

PolyMatrix FreeComplex::d(int n) const {
    auto it = diff.find(n);
    if (it != diff.end()) return it->second;
    return pm_zero(rank_at(n - 1), rank_at(n));
}

int FreeComplex::min_degree() const { return ranks.empty() ? 0 : ranks.begin()->first; }
int FreeComplex::max_degree() const { return ranks.empty() ? 0 : ranks.rbegin()->first; }

std::vector<std::string> validate_complex(const FreeComplex& c) {
    std::vector<std::string> bad;
    for (const auto& [n, m] : c.diff) {
        if (static_cast<int>(m.size()) != c.rank_at(n - 1) ||
            (c.rank_at(n - 1) && static_cast<int>(m[0].size()) != c.rank_at(n))) {
            bad.push_back("differential at degree " + std::to_string(n) + " has wrong shape");
            continue;
        }
        if (!c.over_poly)
            for (const auto& row : m)
                for (const auto& e : row)
                    if (e.degree() > 0) bad.push_back("non-constant entry in a field complex");
    }
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        if (c.rank_at(n - 1) && c.rank_at(n + 1) && !pm_is_zero(pm_mul(c.d(n), c.d(n + 1))))
            bad.push_back("d o d != 0 at degree " + std::to_string(n + 1));
    return bad;
}

long euler_class(const FreeComplex& c) {
    long e = 0;
    for (const auto& [n, r] : c.ranks) e += (n % 2 == 0 ? 1 : -1) * r;
    return e;
}

FreeComplex two_term_complex(const Poly& d1) {
    FreeComplex c;
    c.over_poly = true;
    c.ranks[0] = 1;
    c.ranks[1] = 1;
    c.diff[1] = {{d1}};
    return c;
}

FreeComplex bimodule_p() { return two_term_complex(Poly::t()); }

std::map<int, DegreeHomology> homology_presentation(const FreeComplex& c) {
    auto bad = validate_complex(c);
    if (!bad.empty()) throw CompositionNonzero(bad.front());

    std::map<int, DegreeHomology> out;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        int rn = c.rank_at(n);
        if (!rn) continue;

        // kernel of d_n as the last columns of the Smith column transform
        SmithResult out_snf;
        if (c.rank_at(n - 1) == 0) {
            out_snf.rank = 0;
            out_snf.V = pm_identity(rn);
            out_snf.Vinv = pm_identity(rn);
        } else {
            out_snf = smith_normal_form(c.d(n));
        }
        int kdim = rn - out_snf.rank;

        // incoming generators in kernel coordinates: rows rank.. of Vinv * d_{n+1}
        PolyMatrix incoming = c.d(n + 1);
        DegreeHomology h;
        if (kdim == 0) {
            out[n] = h;
            continue;
        }
        PolyMatrix rel = pm_zero(kdim, c.rank_at(n + 1));
        if (c.rank_at(n + 1)) {
            PolyMatrix coords = pm_mul(out_snf.Vinv, incoming);
            for (int i = 0; i < out_snf.rank; ++i)
                for (const auto& e : coords[i])
                    if (!e.is_zero())
                        throw CompositionNonzero("incoming image is not a cycle at degree " +
                                                 std::to_string(n));
            for (int i = 0; i < kdim; ++i) rel[i] = coords[out_snf.rank + i];
        }
        SmithResult rel_snf = smith_normal_form(rel);
        h.free_rank = kdim - rel_snf.rank;
        for (const auto& d : rel_snf.divisors)
            if (!d.is_unit()) h.torsion.push_back(d);
        out[n] = h;
    }
    return out;
}

bool localization_acyclic(const FreeComplex& c) {
    for (const auto& [n, h] : homology_presentation(c)) {
        if (h.free_rank) return false;
        for (const auto& d : h.torsion)
            if (!d.is_unit_times_t_power()) return false;
    }
    return true;
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (a.over_poly != b.over_poly) throw ValidationError("mixed base rings in a direct sum");
    FreeComplex c;
    c.over_poly = a.over_poly;
    int lo = std::min(a.min_degree(), b.min_degree());
    int hi = std::max(a.max_degree(), b.max_degree());
    for (int n = lo; n <= hi; ++n) {
        int r = a.rank_at(n) + b.rank_at(n);
        if (r) c.ranks[n] = r;
    }
    for (int n = lo; n <= hi + 1; ++n) {
        int rows = c.rank_at(n - 1), cols = c.rank_at(n);
        if (!rows || !cols) continue;
        PolyMatrix m = pm_zero(rows, cols);
        PolyMatrix da = a.d(n), db = b.d(n);
        for (int i = 0; i < a.rank_at(n - 1); ++i)
            for (int j = 0; j < a.rank_at(n); ++j) m[i][j] = da[i][j];
        for (int i = 0; i < b.rank_at(n - 1); ++i)
            for (int j = 0; j < b.rank_at(n); ++j)
                m[a.rank_at(n - 1) + i][a.rank_at(n) + j] = db[i][j];
        c.diff[n] = std::move(m);
    }
    return c;
}

PolyMatrix FreeChainMap::block(int n) const {
    auto it = blocks.find(n);
    if (it != blocks.end()) return it->second;
    return pm_zero(target.rank_at(n), source.rank_at(n));
}

void check_free_chain_map(const FreeChainMap& f) {
    int lo = std::min(f.source.min_degree(), f.target.min_degree());
    int hi = std::max(f.source.max_degree(), f.target.max_degree());
    for (int n = lo; n <= hi + 1; ++n) {
        if (!f.source.rank_at(n)) continue;
        PolyMatrix lhs = pm_mul(f.target.d(n), f.block(n));
        PolyMatrix rhs = pm_mul(f.block(n - 1), f.source.d(n));
        for (size_t i = 0; i < lhs.size(); ++i)
            for (size_t j = 0; j < lhs[i].size(); ++j)
                if (!(lhs[i][j] - rhs[i][j]).is_zero())
                    throw NotChainMap("free chain map fails to commute at degree " +
                                      std::to_string(n));
    }
}

FreeComplex cone(const FreeChainMap& f) {
    check_free_chain_map(f);
    const FreeComplex& s = f.source;
    const FreeComplex& t = f.target;
    FreeComplex c;
    c.over_poly = s.over_poly;
    int lo = std::min(s.min_degree() , t.min_degree());
    int hi = std::max(s.max_degree() + 1, t.max_degree());
    for (int n = lo; n <= hi; ++n) {
        int r = s.rank_at(n - 1) + t.rank_at(n);
        if (r) c.ranks[n] = r;
    }
    for (int n = lo; n <= hi; ++n) {
        int rows = c.rank_at(n - 1), cols = c.rank_at(n);
        if (!rows || !cols) continue;
        PolyMatrix m = pm_zero(rows, cols);
        PolyMatrix ds = s.d(n - 1), dt = t.d(n), fm = f.block(n - 1);
        for (int i = 0; i < s.rank_at(n - 2); ++i)
            for (int j = 0; j < s.rank_at(n - 1); ++j) m[i][j] = -ds[i][j];
        for (int i = 0; i < t.rank_at(n - 1); ++i)
            for (int j = 0; j < s.rank_at(n - 1); ++j)
                m[s.rank_at(n - 2) + i][j] = -fm[i][j];
        for (int i = 0; i < t.rank_at(n - 1); ++i)
            for (int j = 0; j < t.rank_at(n); ++j)
                m[s.rank_at(n - 2) + i][s.rank_at(n - 1) + j] = dt[i][j];
        c.diff[n] = std::move(m);
    }
    auto bad = validate_complex(c);
    if (!bad.empty()) throw CompositionNonzero(bad.front());
    return c;
}

} // namespace cyclo
