#pragma once
#include "cyclo/rat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cyclo {

// Linear combination of basis elements, keyed by basis index.
using LinComb = std::map<int, Rat>;

LinComb lc_term(int i, const Rat& c = Rat(1));
LinComb lc_add(const LinComb& a, const LinComb& b);
LinComb lc_axpy(const LinComb& a, const Rat& c, const LinComb& b);
LinComb lc_scale(const LinComb& a, const Rat& c);
bool lc_is_zero(const LinComb& a);

// Finite-basis, non-negatively weight-graded unital algebra over Q, given by
// structure constants. Products are defined exactly when the weights sum to
// at most `window`; a product absent from `products` within the window is
// zero. Ungraded algebras are the all-weights-zero case with window 0.
struct GradedAlgebra {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> weights;
    int unit = 0;   // basis index of 1
    int window = 0; // W
    std::map<std::pair<int, int>, LinComb> products;

    int dim() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const; // -1 if absent
    bool in_window(int i, int j) const { return weights[i] + weights[j] <= window; }

    // Product of basis elements; throws WindowOverflow outside the window.
    LinComb mul_basis(int i, int j) const;
    // Bilinear extension; throws WindowOverflow if a contributing pair is
    // outside the window.
    LinComb mul(const LinComb& x, const LinComb& y) const;

    std::string lc_str(const LinComb& x) const;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Every violated unit / grading / associativity constraint, empty on success.
std::vector<std::string> validate(const GradedAlgebra& a);

// Throws ValidationError with the first few violations.
AlgebraPtr checked(GradedAlgebra a);

// Linear multiplicative unit-preserving map, given on basis.
struct AlgebraMorphism {
    AlgebraPtr source;
    AlgebraPtr target;
    std::vector<LinComb> images; // per source basis index

    LinComb apply(const LinComb& x) const;
    LinComb apply_basis(int i) const { return images.at(i); }
};

enum class MulCheck {
    Strict,            // every source pair within the source window
    SkipOutsideTarget, // skip pairs whose image product leaves the target window
    None,
};

AlgebraMorphism make_morphism(AlgebraPtr src, AlgebraPtr tgt, std::vector<LinComb> images,
                              MulCheck check = MulCheck::Strict);
AlgebraMorphism identity_morphism(AlgebraPtr a);
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f); // g after f
bool morphisms_equal(const AlgebraMorphism& f, const AlgebraMorphism& g);

} // namespace cyclo
