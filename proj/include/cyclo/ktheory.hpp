#pragma once
#include "cyclo/poly.hpp"

#include <map>
#include <vector>

namespace cyclo {

// Bounded complex of finite free modules over Q[t] (or Q: degree-0
// polynomial entries), presented by polynomial matrices.
struct FreeComplex {
    bool over_poly = true;
    std::map<int, int> ranks;              // degree -> rank
    std::map<int, PolyMatrix> diff;        // d_n : degree n -> degree n-1

    int rank_at(int n) const;
    PolyMatrix d(int n) const; // zero matrix when absent
    int min_degree() const;
    int max_degree() const;
};

// d o d = 0 exactly; violations reported, empty on success.
std::vector<std::string> validate_complex(const FreeComplex& c);

// Alternating sum of ranks: the class in K_0 of perfect complexes.
long euler_class(const FreeComplex& c);

// P = (0 -> k[t] --t--> k[t] -> 0), the projective resolution of the
// trivial k[t]-module k, in degrees 1 and 0.
FreeComplex bimodule_p();

// Same shape with an arbitrary degree-1 differential entry (negative controls).
FreeComplex two_term_complex(const Poly& d1);

struct DegreeHomology {
    int free_rank = 0;
    std::vector<Poly> torsion; // non-unit invariant factors, monic
};

// Homology of the complex as a Q[t]-module, degree by degree.
std::map<int, DegreeHomology> homology_presentation(const FreeComplex& c);

// True iff every homology module is t-power torsion (dies after inverting t).
bool localization_acyclic(const FreeComplex& c);

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

struct FreeChainMap {
    FreeComplex source, target;
    std::map<int, PolyMatrix> blocks;
    PolyMatrix block(int n) const;
};

void check_free_chain_map(const FreeChainMap& f); // throws NotChainMap
FreeComplex cone(const FreeChainMap& f);

} // namespace cyclo
