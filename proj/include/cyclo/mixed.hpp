#pragma once
#include "cyclo/algebra.hpp"
#include "cyclo/sparse.hpp"

#include <map>
#include <memory>
#include <vector>

namespace cyclo {

// Weight-graded mixed complex presented blockwise: for each homological
// degree n >= 0 and weight w, a finite block with differential b of degree -1
// and operator B of degree +1, both weight-preserving. Blocks exist for
// 0 <= n <= degree_cap(); B_n is available for n < degree_cap(). Relations
// b^2 = B^2 = bB + Bb = 0 hold in the safe band (degrees <= degree_cap()-1);
// the top degree is a truncation edge.
class MixedModel {
public:
    virtual ~MixedModel() = default;

    virtual std::string name() const = 0;
    virtual int degree_cap() const = 0;
    virtual std::vector<int> weights() const = 0; // sorted, deduplicated
    virtual int weight_window() const = 0;        // max |w| meaningfully represented

    virtual int dim(int n, int w) const = 0;
    // b_n : (n, w) -> (n-1, w); shape dim(n-1,w) x dim(n,w)
    virtual SparseMatrix boundary(int n, int w) const = 0;
    // B_n : (n, w) -> (n+1, w); shape dim(n+1,w) x dim(n,w); needs n < degree_cap()
    virtual SparseMatrix connes(int n, int w) const = 0;

    virtual std::string basis_label(int n, int w, int idx) const;
};

using Mixed = std::shared_ptr<const MixedModel>;

// Explicit blocks; used by the de Rham models, suspension and tests.
class GenericMixed : public MixedModel {
public:
    GenericMixed(std::string name, int degree_cap, int weight_window)
        : name_(std::move(name)), cap_(degree_cap), window_(weight_window) {}

    void set_dim(int n, int w, int d);
    void set_boundary(int n, int w, SparseMatrix m);
    void set_connes(int n, int w, SparseMatrix m);
    void set_label(int n, int w, std::vector<std::string> labels);

    std::string name() const override { return name_; }
    int degree_cap() const override { return cap_; }
    std::vector<int> weights() const override;
    int weight_window() const override { return window_; }
    int dim(int n, int w) const override;
    SparseMatrix boundary(int n, int w) const override;
    SparseMatrix connes(int n, int w) const override;
    std::string basis_label(int n, int w, int idx) const override;

private:
    std::string name_;
    int cap_, window_;
    std::map<std::pair<int, int>, int> dims_;
    std::map<std::pair<int, int>, SparseMatrix> b_, con_;
    std::map<std::pair<int, int>, std::vector<std::string>> labels_;
};

// Normalized Hochschild mixed complex of a validated algebra whose unit is a
// basis element: degree n is A (x) Abar^n restricted to total weight <= w_max,
// with the Hochschild boundary and the cyclic-shuffle Connes operator.
// Blocks are built on first use.
Mixed bar_mixed(AlgebraPtr a, int n_max, int w_max);

// Largest weight bound for which every product the boundary can request is
// defined; requesting more throws WindowOverflow.
int bar_weight_cap(const GradedAlgebra& a);

enum class DeRhamKind { Poly, Laurent };

// Two-row model (forms in degrees 0 and 1) with b = 0 and B the de Rham
// differential; monomials t^n with 0 <= n <= w_max (Poly) or |n| <= w_max
// (Laurent). The weight-w piece of B is multiplication by w.
Mixed de_rham_model(DeRhamKind kind, int w_max);

// Graded tensor product with Koszul signs on the operators.
Mixed tensor_mixed(Mixed a, Mixed b);

// Degree shift by +1 with a sign flip on both operators.
Mixed suspend(Mixed m);

// Relation report: every violated b^2 / B^2 / bB + Bb = 0 block in the safe
// band, restricted to |w| <= w_limit. Empty on success.
std::vector<std::string> check_mixed_relations(const Mixed& m, int n_limit, int w_limit);

// Degreewise weight-preserving map commuting with b and B.
class MixedMapModel {
public:
    virtual ~MixedMapModel() = default;
    virtual Mixed source() const = 0;
    virtual Mixed target() const = 0;
    // shape target->dim(n,w) x source->dim(n,w)
    virtual SparseMatrix block(int n, int w) const = 0;
};

using MixedMap = std::shared_ptr<const MixedMapModel>;

MixedMap identity_mixed_map(Mixed m);

// f (x) ... (x) f on normalized chains, non-unit slots reduced mod the unit.
// Requires a weight-preserving morphism between validated algebras.
MixedMap induced_mixed_map(const AlgebraMorphism& f, int n_max, int w_max);

// Commutation violations with b and B in the safe band; empty on success.
std::vector<std::string> check_mixed_map(const MixedMap& f, int n_limit, int w_limit);

} // namespace cyclo
