#pragma once
#include "cyclo/algebra.hpp"

namespace cyclo {

// The ground field Q as a one-element algebra.
AlgebraPtr rationals();

// Basis = pairs, weights add, products componentwise (no Koszul signs: all
// algebra elements live in homological degree 0). Window = min of the two.
AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b);

// A[t] truncated at t-degree <= t_cap. Keeps the (base element, t exponent)
// decomposition so the t-factor morphisms below stay available.
struct PolyExtension {
    AlgebraPtr algebra;                     // A[t]
    AlgebraPtr base;                        // A
    std::vector<std::pair<int, int>> decomp; // basis index -> (base index, t exp)
    int t_cap = 0;

    int index_of(int base_idx, int t_exp) const; // -1 if absent
};

PolyExtension polynomial_extension(AlgebraPtr a, int t_cap);

AlgebraMorphism ev0_t(const PolyExtension& e);  // A[t] -> A, t -> 0
AlgebraMorphism ev1_t(const PolyExtension& e);  // A[t] -> A, t -> 1
AlgebraMorphism iota_t(const PolyExtension& e); // A -> A[t]

// p: A -> A_0 kills positive weights; i: A_0 -> A; p o i = id.
struct GradingSplit {
    AlgebraPtr a0;
    AlgebraMorphism inclusion;  // i
    AlgebraMorphism projection; // p
};
GradingSplit grading_split(AlgebraPtr a);

// H: A -> A[t] sending a homogeneous element of weight n to a * t^n.
// Requires t_cap >= max weight. (ev1 on the t factor) o H = id and
// (ev0 on the t factor) o H = i o p.
AlgebraMorphism grading_homotopy(AlgebraPtr a, const PolyExtension& e);

struct KtMorphisms {
    AlgebraPtr k;
    PolyExtension kt;
    AlgebraMorphism iota, ev0, ev1;
};
KtMorphisms kt_morphisms(int window);

struct CatalogEntry {
    std::string key;
    std::string description;
    AlgebraPtr algebra;
};

// Built-in algebras: q, dual (= k[x]/x^2 ungraded), x3, kxk, m2,
// xi-graded (k[xi]/xi^2 with xi of weight 1), kt (windowed k[t]).
std::vector<CatalogEntry> standard_library(int kt_window = 6);
AlgebraPtr catalog_algebra(const std::string& key, int kt_window = 6); // nullptr if unknown

} // namespace cyclo
