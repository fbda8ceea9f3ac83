#include "cyclo/poly.hpp"
#include "cyclo/errors.hpp"

#include <sstream>

namespace cyclo {

Poly::Poly(const Rat& c) {
    if (!cyclo::is_zero(c)) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t(int power) { return monomial(Rat(1), power); }

Poly Poly::monomial(const Rat& c, int power) {
    Poly p;
    if (cyclo::is_zero(c)) return p;
    p.c_.assign(power + 1, Rat(0));
    p.c_[power] = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && cyclo::is_zero(c_.back())) c_.pop_back();
}

bool Poly::is_unit_times_t_power() const {
    if (is_zero()) return false;
    for (int i = 0; i < degree(); ++i)
        if (!cyclo::is_zero(c_[i])) return false;
    return true;
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rat(0);
    return c_[i];
}

const Rat& Poly::lead() const {
    if (is_zero()) throw IndexOutOfRange("lead of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out;
    out.c_.resize(std::max(c_.size(), rhs.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out.c_[i] += rhs.c_[i];
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) { return *this = *this + rhs; }
Poly& Poly::operator-=(const Poly& rhs) { return *this = *this - rhs; }

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    Poly out;
    out.c_.assign(c_.size() + rhs.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) out.c_[i + j] += c_[i] * rhs.c_[j];
    out.trim();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw IndexOutOfRange("division by zero polynomial");
    Poly q, r(*this);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat c = r.lead() / d.lead();
        int k = r.degree() - d.degree();
        Poly term = monomial(c, k);
        q += term;
        r -= term * d;
    }
    return {q, r};
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly out(*this);
    Rat l = lead();
    for (auto& c : out.c_) c /= l;
    return out;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (cyclo::is_zero(c_[i])) continue;
        Rat c = c_[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        } else if (sgn(c) < 0 && i > 0 && c == Rat(-1)) {
            os << "-";
            c = abs(c);
        }
        first = false;
        if (i == 0 || c != Rat(1)) os << rat_to_string(c);
        if (i > 0) {
            if (c != Rat(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyMatrix pm_zero(int rows, int cols) {
    return PolyMatrix(rows, std::vector<Poly>(cols));
}

PolyMatrix pm_identity(int n) {
    PolyMatrix m = pm_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = Poly(1);
    return m;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty()) return {};
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(a[0].size());
    if (b.empty()) {
        if (k != 0) throw IndexOutOfRange("poly matrix product shape mismatch");
        return pm_zero(n, 0);
    }
    int m = static_cast<int>(b[0].size());
    if (k != static_cast<int>(b.size()))
        throw IndexOutOfRange("poly matrix product shape mismatch");
    PolyMatrix out = pm_zero(n, m);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (int j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

bool pm_is_zero(const PolyMatrix& a) {
    for (const auto& row : a)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

Poly pm_det(const PolyMatrix& a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return Poly(1);
    if (n == 1) return a[0][0];
    Poly det;
    for (int j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = a[0][j] * pm_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

namespace {

struct SnfWork {
    PolyMatrix a, v, vinv;
    int rows, cols;

    void swap_rows(int i, int j) {
        if (i != j) std::swap(a[i], a[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
        std::swap(vinv[i], vinv[j]);
    }
    // row_i -= q * row_k
    void row_op(int i, int k, const Poly& q) {
        if (q.is_zero()) return;
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
    }
    // col_j -= q * col_k  (tracked: V gets the same op, Vinv the inverse op)
    void col_op(int j, int k, const Poly& q) {
        if (q.is_zero()) return;
        for (int r = 0; r < rows; ++r) a[r][j] -= q * a[r][k];
        for (int r = 0; r < cols; ++r) v[r][j] -= q * v[r][k];
        for (int c = 0; c < cols; ++c) vinv[k][c] += q * vinv[j][c];
    }

    // Smallest-degree nonzero entry of the trailing submatrix.
    bool find_pivot(int corner, int* pi, int* pj) const {
        int best = -1;
        for (int i = corner; i < rows; ++i)
            for (int j = corner; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                if (best < 0 || a[i][j].degree() < best) {
                    best = a[i][j].degree();
                    *pi = i;
                    *pj = j;
                }
            }
        return best >= 0;
    }
};

} // namespace

SmithResult smith_normal_form(PolyMatrix m) {
    SnfWork w;
    w.rows = static_cast<int>(m.size());
    w.cols = w.rows ? static_cast<int>(m[0].size()) : 0;
    w.a = std::move(m);
    w.v = pm_identity(w.cols);
    w.vinv = pm_identity(w.cols);

    int corner = 0;
    int limit = std::min(w.rows, w.cols);
    while (corner < limit) {
        int pi, pj;
        if (!w.find_pivot(corner, &pi, &pj)) break;
        w.swap_rows(corner, pi);
        w.swap_cols(corner, pj);

        bool clean = true;
        for (int i = corner + 1; i < w.rows; ++i) {
            if (w.a[i][corner].is_zero()) continue;
            auto [q, r] = w.a[i][corner].divmod(w.a[corner][corner]);
            w.row_op(i, corner, q);
            if (!r.is_zero()) clean = false;
        }
        for (int j = corner + 1; j < w.cols; ++j) {
            if (w.a[corner][j].is_zero()) continue;
            auto [q, r] = w.a[corner][j].divmod(w.a[corner][corner]);
            w.col_op(j, corner, q);
            if (!r.is_zero()) clean = false;
        }
        if (!clean) continue; // a smaller-degree entry appeared, re-pick pivot

        // Enforce divisibility of the trailing submatrix by the pivot.
        bool offender = false;
        for (int i = corner + 1; i < w.rows && !offender; ++i)
            for (int j = corner + 1; j < w.cols && !offender; ++j)
                if (!w.a[corner][corner].divides(w.a[i][j])) {
                    w.row_op(corner, i, Poly(-1)); // row_corner += row_i
                    offender = true;
                }
        if (offender) continue;
        ++corner;
    }

    SmithResult res;
    res.rank = corner;
    for (int k = 0; k < corner; ++k) res.divisors.push_back(w.a[k][k].monic());
    res.V = std::move(w.v);
    res.Vinv = std::move(w.vinv);
    return res;
}

std::vector<Poly> elementary_divisors(const PolyMatrix& a) {
    return smith_normal_form(a).divisors;
}

} // namespace cyclo
