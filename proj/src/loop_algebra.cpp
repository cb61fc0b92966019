#include "solfac/loop_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace solfac {

C2Matrix C2Matrix::adjoint() const {
    return {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
}

double C2Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : e) m = std::max(m, std::abs(v));
    return m;
}

double C2Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : e) s += std::norm(v);
    return std::sqrt(s);
}

bool C2Matrix::is_g_form(double tol) const {
    return std::abs(e[2] + std::conj(e[1])) <= tol && std::abs(e[3] - std::conj(e[0])) <= tol;
}

C2Matrix& C2Matrix::operator+=(const C2Matrix& o) {
    for (int i = 0; i < 4; ++i) e[i] += o.e[i];
    return *this;
}

C2Matrix& C2Matrix::operator-=(const C2Matrix& o) {
    for (int i = 0; i < 4; ++i) e[i] -= o.e[i];
    return *this;
}

C2Matrix operator+(C2Matrix a, const C2Matrix& b) { return a += b; }
C2Matrix operator-(C2Matrix a, const C2Matrix& b) { return a -= b; }

C2Matrix operator*(const cplx& s, const C2Matrix& m) {
    return {s * m.e[0], s * m.e[1], s * m.e[2], s * m.e[3]};
}

C2Matrix operator*(const C2Matrix& m, const cplx& s) { return s * m; }

C2Matrix mat_mul(const C2Matrix& a, const C2Matrix& b) {
    return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
            a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
}

C2Matrix operator*(const C2Matrix& a, const C2Matrix& b) { return mat_mul(a, b); }

C2Matrix commutator(const C2Matrix& a, const C2Matrix& b) {
    return mat_mul(a, b) - mat_mul(b, a);
}

C2Matrix mat_inv(const C2Matrix& a, double rel_tol) {
    const cplx d = a.det();
    const double scale = a.max_abs();
    if (std::abs(d) <= rel_tol * scale * scale) {
        throw SingularMatrix("mat_inv: |det| = " + std::to_string(std::abs(d)) +
                             " below tolerance");
    }
    const cplx inv_d = 1.0 / d;
    return {inv_d * a.e[3], -inv_d * a.e[1], -inv_d * a.e[2], inv_d * a.e[0]};
}

LaurentMatrix::LaurentMatrix(int k_min, int k_max) : k_min_(k_min) {
    if (k_max < k_min) throw Error("LaurentMatrix: k_max < k_min");
    coeffs_.resize(static_cast<std::size_t>(k_max - k_min) + 1);
}

LaurentMatrix LaurentMatrix::constant(const C2Matrix& m) { return monomial(m, 0); }

LaurentMatrix LaurentMatrix::monomial(const C2Matrix& m, int k) {
    LaurentMatrix r(k, k);
    r.coeffs_[0] = m;
    return r;
}

C2Matrix LaurentMatrix::coeff(int k) const {
    if (k < k_min() || k > k_max()) return C2Matrix::zero();
    return coeffs_[static_cast<std::size_t>(k - k_min_)];
}

void LaurentMatrix::set_coeff(int k, const C2Matrix& m) {
    if (k < k_min() || k > k_max()) throw Error("LaurentMatrix::set_coeff: exponent out of range");
    coeffs_[static_cast<std::size_t>(k - k_min_)] = m;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
    LaurentMatrix r(std::min(k_min(), o.k_min()), std::max(k_max(), o.k_max()));
    for (int k = r.k_min(); k <= r.k_max(); ++k) r.set_coeff(k, coeff(k) + o.coeff(k));
    *this = std::move(r);
    return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) {
    LaurentMatrix r(std::min(k_min(), o.k_min()), std::max(k_max(), o.k_max()));
    for (int k = r.k_min(); k <= r.k_max(); ++k) r.set_coeff(k, coeff(k) - o.coeff(k));
    *this = std::move(r);
    return *this;
}

LaurentMatrix LaurentMatrix::trimmed(double tol) const {
    int lo = k_min();
    int hi = k_max();
    while (lo < hi && coeff(lo).max_abs() <= tol) ++lo;
    while (hi > lo && coeff(hi).max_abs() <= tol) --hi;
    LaurentMatrix r(lo, hi);
    for (int k = lo; k <= hi; ++k) r.set_coeff(k, coeff(k));
    return r;
}

double LaurentMatrix::max_coeff_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, c.max_abs());
    return m;
}

LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }

C2Matrix laurent_eval(const LaurentMatrix& L, cplx z, bool on_circle) {
    if (on_circle && std::abs(std::abs(z) - 1.0) > 1e-12) {
        throw Error("laurent_eval: |z| != 1");
    }
    if (z == cplx(0.0)) {
        if (L.k_min() < 0) {
            throw ZeroArgument("laurent_eval: z = 0 with negative exponents present");
        }
        return L.coeff(0);  // zero matrix when the range starts above z^0
    }
    // Horner in z from the top exponent, then multiply by z^k_min.
    C2Matrix acc = L.coeff(L.k_max());
    for (int k = L.k_max() - 1; k >= L.k_min(); --k) acc = z * acc + L.coeff(k);
    cplx zk = std::pow(z, L.k_min());
    return zk * acc;
}

LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    LaurentMatrix r(a.k_min() + b.k_min(), a.k_max() + b.k_max());
    for (int i = a.k_min(); i <= a.k_max(); ++i) {
        for (int j = b.k_min(); j <= b.k_max(); ++j) {
            r.set_coeff(i + j, r.coeff(i + j) + mat_mul(a.coeff(i), b.coeff(j)));
        }
    }
    return r;
}

LaurentMatrix laurent_commutator(const LaurentMatrix& a, const LaurentMatrix& b) {
    return laurent_mul(a, b) - laurent_mul(b, a);
}

bool is_g_form(const LaurentMatrix& m, double tol) {
    for (int k = m.k_min(); k <= m.k_max(); ++k) {
        if (!m.coeff(k).is_g_form(tol)) return false;
    }
    return true;
}

LaurentMatrix project(const LaurentMatrix& L, ZPart part) {
    const auto keep = [part](int k) {
        switch (part) {
            case ZPart::StrictlyPositive: return k >= 1;
            case ZPart::NonNegative: return k >= 0;
            case ZPart::NonPositive: return k <= 0;
            case ZPart::StrictlyNegative: return k < 0;
        }
        return false;
    };
    LaurentMatrix r(L.k_min(), L.k_max());
    for (int k = L.k_min(); k <= L.k_max(); ++k) {
        if (keep(k)) r.set_coeff(k, L.coeff(k));
    }
    return r;
}

}  // namespace solfac
