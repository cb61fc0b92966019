#pragma once

// Dense complex LU with partial pivoting, sized for the small Baker systems
// (order 2n, n being the soliton count; never more than a few dozen rows).

#include <complex>
#include <vector>

#include "solfac/errors.hpp"

namespace solfac {

using cplx = std::complex<double>;

// Row-major dense complex matrix.
class CMatrix {
public:
    CMatrix() : n_rows_(0), n_cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols) : n_rows_(rows), n_cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }

    cplx& at(std::size_t r, std::size_t c) { return a_[r * n_cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a_[r * n_cols_ + c]; }

    double max_abs() const;
    double one_norm() const;  // max column sum of entry magnitudes

private:
    std::size_t n_rows_, n_cols_;
    std::vector<cplx> a_;
};

// PA = LU factorization of a square matrix.  Throws SingularSystem when a
// pivot falls below rel_pivot_tol * max_abs of the input.
class LuFactorization {
public:
    explicit LuFactorization(CMatrix a, double rel_pivot_tol = 1e-14);

    std::size_t order() const { return lu_.rows(); }

    std::vector<cplx> solve(std::vector<cplx> rhs) const;
    // Solves A^H x = rhs using the same factors (A^H = U^H L^H P).
    std::vector<cplx> solve_adjoint(const std::vector<cplx>& rhs) const;

    cplx determinant() const;

    // Higham-style one-norm power iteration estimating ||A||_1 * ||A^-1||_1.
    double condition_estimate() const;

private:
    CMatrix lu_;
    std::vector<std::size_t> perm_;  // row i of LU came from row perm_[i] of A
    int perm_sign_ = 1;
    double input_one_norm_ = 0.0;
};

// One-shot convenience: factorize and solve.
std::vector<cplx> solve_linear_system(const CMatrix& a, const std::vector<cplx>& rhs,
                                      double rel_pivot_tol = 1e-14);

}  // namespace solfac
