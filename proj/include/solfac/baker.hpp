#pragma once

// Baker functions for the subspaces W_n: assembly and solution of the two
// 2n x 2n interpolation systems, the negative-power loop g_-(x,t) they
// generate, the scalar field u = b_1, the closed one-soliton form, and the
// determinant-quotient route to b_1 used as an algebraic cross-check.

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "solfac/linear_solve.hpp"
#include "solfac/loop_algebra.hpp"
#include "solfac/spectral_data.hpp"

namespace solfac {

struct SolverTolerances {
    double rel_pivot = 1e-14;          // LU pivot floor, relative to max entry
    double ill_condition = 1e12;       // condition estimate above this sets the warning flag
    double structure_violation = 1e-6; // hard cap on |c_k + conj(b_k)|, |d_k - conj(a_k)|
};

// Coefficients of the z^-k tails of the two Baker functions at one (x, t).
// After a successful solve c_k = -conj(b_k) and d_k = conj(a_k) hold; they are
// enforced exactly by symmetric averaging, with the raw deviation recorded.
struct BakerCoefficients {
    std::size_t n = 0;
    std::vector<cplx> a, b, c, d;

    double structure_residual = 0.0;  // max structural deviation before enforcement
    double cond_ac = 0.0;             // one-norm condition estimates of the two systems
    double cond_bd = 0.0;
    bool ill_conditioned = false;
};

// Evaluation of Psi_1, Psi_2 at a fixed (x, t).
struct BakerFunctions {
    BakerCoefficients coeffs;
    double x = 0.0;
    double t = 0.0;
};

enum class BakerIndex { Psi1, Psi2 };

// System for (a_1..a_n, c_1..c_n): row j encodes
//   sum_k [lambda_j e^{i theta_j} p_j^-k] c_k - [p_j^-k] a_k = 1
// at p_j, and row n+j the same at conj(p_j) with mu_j and conj(theta_j).
// Rows whose exponential factor exceeds the overflow range are rescaled by
// e^{-|Im theta_j|}; row scaling leaves the solution unchanged.
std::pair<CMatrix, std::vector<cplx>> assemble_ac_system(const SpectralData& data, double x,
                                                         double t);

// System for (b_1..b_n, d_1..d_n): row j encodes
//   sum_k [lambda_j^-1 e^{-i theta_j} p_j^-k] b_k - [p_j^-k] d_k = 1.
std::pair<CMatrix, std::vector<cplx>> assemble_bd_system(const SpectralData& data, double x,
                                                         double t);

// Solves both systems, verifies and enforces the structural identities, and
// records condition estimates.  Throws SingularSystem on pivot breakdown and
// StructureViolation when the raw identities exceed tol.structure_violation.
BakerCoefficients solve_baker(const SpectralData& data, double x, double t,
                              const SolverTolerances& tol = {});

// I + sum_k A_k z^-k with A_k = [[a_k, b_k], [-conj(b_k), conj(a_k)]].
LaurentMatrix g_minus(const BakerCoefficients& coeffs,
                      double structure_tol = SolverTolerances{}.structure_violation);

// Psi_1(z) = ((1 + sum a_k z^-k) e^{-i(xz+tz^2)}, (sum c_k z^-k) e^{+i(xz+tz^2)});
// Psi_2 analogously with (b_k, 1 + sum d_k z^-k).  z must be nonzero.
std::array<cplx, 2> baker_eval(const BakerFunctions& f, cplx z, BakerIndex which);

// u(x, t) = b_1.
cplx nls_field(const SpectralData& data, double x, double t);

// Closed one-soliton coefficients for p = alpha + i beta,
// lambda = exp(-2 beta x0 + 2i phi):
//   a = -alpha - i beta tanh(2 beta (x + 2 alpha t + x0))
//   b =  i beta exp(2i(alpha x + (alpha^2 - beta^2) t + phi))
//          * sech(2 beta (x + 2 alpha t + x0))
// The tanh sign and the 2*alpha*t drift are pinned by the direct solve of the
// n = 1 interpolation system (see tests) and by the requirement that b solve
// i u_t - u_xx/2 - 4u|u|^2 = 0.
std::pair<cplx, cplx> one_soliton_closed_form(const SolitonParams& sp, double x, double t);

// b_1 as a quotient of 2n x 2n determinants.  Row j holds
// (q_j e^{-i theta_j}, ..., q_j^n e^{-i theta_j}, -lambda_j q_j, ..., -lambda_j q_j^n)
// with q_j = 1/p_j, rows n+j the conjugate-point analogue with mu_j; the
// numerator determinant replaces column one by (lambda_1..lambda_n mu_1..mu_n)^T.
// The common prefactor prod 1/(lambda_j mu_j) cancels in the quotient and is
// omitted.
cplx nsoliton_determinant_b1(const SpectralData& data, double x, double t,
                             double rel_pivot_tol = SolverTolerances{}.rel_pivot);

}  // namespace solfac
