#pragma once
#include "cyclo/rat.hpp"

#include <string>
#include <vector>

namespace cyclo {

// Dense univariate polynomial over Q, coefficient of t^i at index i.
// Invariant: no trailing zero coefficients; zero polynomial has empty storage.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);
    Poly(long c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs);

    static Poly t(int power = 1);
    static Poly monomial(const Rat& c, int power);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    bool is_zero() const { return c_.empty(); }
    bool is_unit() const { return degree() == 0; } // nonzero constant
    bool is_unit_times_t_power() const;            // c * t^k, c != 0
    Rat coeff(int i) const;
    const Rat& lead() const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    bool operator==(const Poly& rhs) const { return c_ == rhs.c_; }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    bool divides(const Poly& other) const;

    Poly monic() const;
    Rat eval(const Rat& x) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly poly_gcd(Poly a, Poly b); // monic

using PolyMatrix = std::vector<std::vector<Poly>>; // row-major dense

PolyMatrix pm_zero(int rows, int cols);
PolyMatrix pm_identity(int n);
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
bool pm_is_zero(const PolyMatrix& a);
Poly pm_det(const PolyMatrix& a); // Laplace expansion, small matrices only

struct SmithResult {
    std::vector<Poly> divisors; // monic invariant factors d_1 | d_2 | ... (one per rank)
    int rank = 0;
    PolyMatrix V;    // column transform: A*V has the kernel in its last cols
    PolyMatrix Vinv; // inverse of V, for coordinates in the kernel basis
};

// Smith normal form over the PID Q[t]; divisors are monic and form a
// divisibility chain.
SmithResult smith_normal_form(PolyMatrix a);

std::vector<Poly> elementary_divisors(const PolyMatrix& a);

} // namespace cyclo
