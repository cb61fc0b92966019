#pragma once

// Spectral data (p_j, lambda_j) defining the subspace W_n behind an
// n-soliton solution, plus soliton-parameter conversion and the phase
// theta(p, x, t) = 2(x p + t p^2) driving the time evolution.

#include <complex>
#include <vector>

#include "solfac/errors.hpp"

namespace solfac {

using cplx = std::complex<double>;

struct SpectralPair {
    cplx p;       // point in the punctured open unit disk, off the real axis
    cplx lambda;  // nonzero parameter; the conjugate point carries mu = -1/conj(lambda)
};

struct SpectralData {
    std::vector<SpectralPair> pairs;

    std::size_t n() const { return pairs.size(); }
};

// One-soliton parameters: p = alpha + i*beta, lambda = exp(-2 beta x0 + 2i phi).
struct SolitonParams {
    double alpha = 0.0;
    double beta = 0.0;  // must be nonzero
    double x0 = 0.0;
    double phi = 0.0;
};

// Checks all invariants: 0 < |p_j| < 1, |Im p_j| > 1e-8, all points of
// {p_j} union {conj(p_j)} pairwise separated by more than 1e-6, lambda_j != 0.
// Throws PointOutsideDisk / RealSpectralPoint / DuplicatePoint / ZeroLambda
// naming the offending (1-based) index.
void validate(const SpectralData& data);

// mu = -1/conj(lambda); satisfies lambda * conj(mu) = -1.
cplx derived_mu(cplx lambda);

// Converts soliton parameters to a single validated spectral pair.
SpectralData from_soliton_params(const SolitonParams& sp);
SpectralData from_soliton_params(const std::vector<SolitonParams>& sps);

// theta(p, x, t) = 2 (x p + t p^2).
cplx phase(cplx p, double x, double t);

}  // namespace solfac
