#pragma once

// Complex 2x2 matrices and matrix-valued Laurent polynomials in z.
// Everything here is a small value type with pure operations; all higher
// modules (Baker solver, gauge map, Lax pairs) are built on top of these.

#include <array>
#include <complex>
#include <vector>

#include "solfac/errors.hpp"

namespace solfac {

using cplx = std::complex<double>;

// Row-major 2x2 complex matrix.
struct C2Matrix {
    std::array<cplx, 4> e{};  // e[0]=m11, e[1]=m12, e[2]=m21, e[3]=m22

    constexpr C2Matrix() = default;
    constexpr C2Matrix(cplx m11, cplx m12, cplx m21, cplx m22) : e{m11, m12, m21, m22} {}

    cplx& at(int r, int c) { return e[2 * r + c]; }
    const cplx& at(int r, int c) const { return e[2 * r + c]; }

    static C2Matrix zero() { return {}; }
    static C2Matrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

    // Pauli matrices and sigma = i*sigma3, the generator of the t_k flows.
    static C2Matrix pauli1() { return {0.0, 1.0, 1.0, 0.0}; }
    static C2Matrix pauli2() { return {0.0, cplx(0, -1), cplx(0, 1), 0.0}; }
    static C2Matrix pauli3() { return {1.0, 0.0, 0.0, -1.0}; }
    static C2Matrix sigma() { return {cplx(0, 1), 0.0, 0.0, cplx(0, -1)}; }

    cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
    cplx trace() const { return e[0] + e[3]; }
    C2Matrix adjoint() const;       // conjugate transpose
    double max_abs() const;         // max entry magnitude
    double frobenius_norm() const;

    // True iff the matrix has the shape [[a, b], [-conj(b), conj(a)]].
    bool is_g_form(double tol) const;

    C2Matrix& operator+=(const C2Matrix& o);
    C2Matrix& operator-=(const C2Matrix& o);
};

C2Matrix operator+(C2Matrix a, const C2Matrix& b);
C2Matrix operator-(C2Matrix a, const C2Matrix& b);
C2Matrix operator*(const cplx& s, const C2Matrix& m);
C2Matrix operator*(const C2Matrix& m, const cplx& s);

C2Matrix mat_mul(const C2Matrix& a, const C2Matrix& b);
C2Matrix operator*(const C2Matrix& a, const C2Matrix& b);
C2Matrix commutator(const C2Matrix& a, const C2Matrix& b);

// Cofactor inverse.  Throws SingularMatrix when |det| <= tol_scale, where
// tol_scale defaults to 1e-14 * max_abs()^2 (relative criterion; the
// determinant of a 2x2 matrix scales quadratically with its entries).
C2Matrix mat_inv(const C2Matrix& a, double rel_tol = 1e-14);

// Matrix-valued Laurent polynomial sum_{k=k_min}^{k_max} C_k z^k with a dense
// coefficient array.  k_min <= k_max; either sign is allowed on both ends.
class LaurentMatrix {
public:
    LaurentMatrix() : k_min_(0), coeffs_(1) {}  // zero polynomial, range {0}
    LaurentMatrix(int k_min, int k_max);

    static LaurentMatrix constant(const C2Matrix& m);
    static LaurentMatrix identity() { return constant(C2Matrix::identity()); }
    // m * z^k
    static LaurentMatrix monomial(const C2Matrix& m, int k);

    int k_min() const { return k_min_; }
    int k_max() const { return k_min_ + static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of z^k; zero matrix outside the stored range.
    C2Matrix coeff(int k) const;
    void set_coeff(int k, const C2Matrix& m);  // k must lie in range

    LaurentMatrix& operator+=(const LaurentMatrix& o);
    LaurentMatrix& operator-=(const LaurentMatrix& o);

    // Drops zero coefficients at both ends of the range (down to range {0}).
    LaurentMatrix trimmed(double tol = 0.0) const;

    double max_coeff_abs() const;

private:
    int k_min_;
    std::vector<C2Matrix> coeffs_;  // coeffs_[i] multiplies z^(k_min_ + i)
};

LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b);
LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b);

// sum_k C_k z^k at a point.  Intended for |z| = 1 (enforced to 1e-12);
// pass on_circle = false to evaluate elsewhere, e.g. at spectral points
// inside the disk.
C2Matrix laurent_eval(const LaurentMatrix& L, cplx z, bool on_circle = true);

// Cauchy product; the exponent range is the sum of the input ranges.
LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b);

LaurentMatrix laurent_commutator(const LaurentMatrix& a, const LaurentMatrix& b);

// Coefficient-wise G-form test over every stored coefficient.
bool is_g_form(const LaurentMatrix& m, double tol);

// Exponent-range selections.  StrictlyPositive keeps k >= 1 (the projection
// used by the h-flows), NonNegative keeps k >= 0 (the g-flows); NonPositive
// and StrictlyNegative are their complements.
enum class ZPart { StrictlyPositive, NonNegative, NonPositive, StrictlyNegative };

LaurentMatrix project(const LaurentMatrix& L, ZPart part);

}  // namespace solfac
