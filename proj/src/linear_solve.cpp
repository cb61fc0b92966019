#include "solfac/linear_solve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace solfac {

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::one_norm() const {
    double best = 0.0;
    for (std::size_t c = 0; c < n_cols_; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < n_rows_; ++r) s += std::abs(at(r, c));
        best = std::max(best, s);
    }
    return best;
}

LuFactorization::LuFactorization(CMatrix a, double rel_pivot_tol) : lu_(std::move(a)) {
    if (lu_.rows() != lu_.cols()) throw Error("LuFactorization: matrix not square");
    const std::size_t n = lu_.rows();
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    input_one_norm_ = lu_.one_norm();
    const double pivot_floor = rel_pivot_tol * lu_.max_abs();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        double best_abs = std::abs(lu_.at(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double m = std::abs(lu_.at(r, k));
            if (m > best_abs) {
                best_abs = m;
                best = r;
            }
        }
        if (best_abs <= pivot_floor) {
            throw SingularSystem("LU pivot " + std::to_string(best_abs) +
                                 " below tolerance at column " + std::to_string(k));
        }
        if (best != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu_.at(k, c), lu_.at(best, c));
            std::swap(perm_[k], perm_[best]);
            perm_sign_ = -perm_sign_;
        }
        const cplx inv_pivot = 1.0 / lu_.at(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const cplx f = lu_.at(r, k) * inv_pivot;
            lu_.at(r, k) = f;
            for (std::size_t c = k + 1; c < n; ++c) lu_.at(r, c) -= f * lu_.at(k, c);
        }
    }
}

std::vector<cplx> LuFactorization::solve(std::vector<cplx> rhs) const {
    const std::size_t n = order();
    if (rhs.size() != n) throw Error("LuFactorization::solve: rhs size mismatch");
    std::vector<cplx> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
    // Ly = Pb (unit lower triangular)
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) x[i] -= lu_.at(i, j) * x[j];
    }
    // Ux = y
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_.at(ii, j) * x[j];
        x[ii] /= lu_.at(ii, ii);
    }
    return x;
}

std::vector<cplx> LuFactorization::solve_adjoint(const std::vector<cplx>& rhs) const {
    // A = P^T L U, so A^H = U^H L^H P; solve U^H w = rhs, L^H v = w, x = P^T v.
    const std::size_t n = order();
    if (rhs.size() != n) throw Error("LuFactorization::solve_adjoint: rhs size mismatch");
    std::vector<cplx> w(rhs);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) w[i] -= std::conj(lu_.at(j, i)) * w[j];
        w[i] /= std::conj(lu_.at(i, i));
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) w[ii] -= std::conj(lu_.at(j, ii)) * w[j];
    }
    std::vector<cplx> x(n);
    for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = w[i];
    return x;
}

cplx LuFactorization::determinant() const {
    cplx d = static_cast<double>(perm_sign_);
    for (std::size_t i = 0; i < order(); ++i) d *= lu_.at(i, i);
    return d;
}

double LuFactorization::condition_estimate() const {
    const std::size_t n = order();
    if (n == 0) return 0.0;
    // Estimate ||A^-1||_1 by the Hager/Higham iteration: repeatedly solve with
    // A and A^H, steering toward the maximizing unit vector.
    std::vector<cplx> x(n, cplx(1.0 / static_cast<double>(n)));
    double inv_norm = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<cplx> y = solve(x);
        double y1 = 0.0;
        for (const auto& v : y) y1 += std::abs(v);
        inv_norm = std::max(inv_norm, y1);

        std::vector<cplx> xi(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double m = std::abs(y[i]);
            xi[i] = m > 0.0 ? y[i] / m : cplx(1.0);
        }
        std::vector<cplx> z = solve_adjoint(xi);
        std::size_t j_best = 0;
        double z_best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(z[i]) > z_best) {
                z_best = std::abs(z[i]);
                j_best = i;
            }
        }
        double zx = 0.0;
        for (std::size_t i = 0; i < n; ++i) zx += std::real(std::conj(z[i]) * x[i]);
        if (z_best <= zx + 1e-16) break;  // converged to a local maximizer
        std::fill(x.begin(), x.end(), cplx(0.0));
        x[j_best] = 1.0;
    }
    return input_one_norm_ * inv_norm;
}

std::vector<cplx> solve_linear_system(const CMatrix& a, const std::vector<cplx>& rhs,
                                      double rel_pivot_tol) {
    return LuFactorization(a, rel_pivot_tol).solve(rhs);
}

}  // namespace solfac
