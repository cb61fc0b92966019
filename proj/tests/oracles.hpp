#pragma once

// Test-side oracles, kept independent of the library solve path:
//  - a literal Cramer's-rule solve of the one-soliton interpolation systems,
//  - the analytic rotating-magnetization fields and their derivatives,
//  - a generator of random valid spectral data with a fixed seed.

#include <cmath>
#include <complex>
#include <random>

#include "solfac/gauge_map.hpp"
#include "solfac/loop_algebra.hpp"
#include "solfac/spectral_data.hpp"

namespace oracles {

using solfac::cplx;

struct OneSolitonCoeffs {
    cplx a, b, c, d;
};

// Direct 2x2 Cramer solve of the interpolation conditions at p and conj(p):
//   (1 + a/p) = lambda e^{i theta} (c/p),  (b/p) = lambda e^{i theta} (1 + d/p)
// and the conjugate-point versions with mu = -1/conj(lambda).  This touches
// none of the library assembly or LU code.
inline OneSolitonCoeffs one_soliton_cramer(cplx p, cplx lambda, double x, double t) {
    const cplx pbar = std::conj(p);
    const cplx mu = -1.0 / std::conj(lambda);
    const cplx theta = 2.0 * (x * p + t * p * p);
    const cplx theta_bar = std::conj(theta);
    const cplx i1(0, 1);
    const cplx e_p = std::exp(i1 * theta);        // e^{i theta}
    const cplx e_q = std::exp(i1 * theta_bar);    // e^{i conj(theta)}

    // (a, c) system: rows [-1/p, lambda e^{i theta}/p], rhs 1.
    const cplx a11 = -1.0 / p, a12 = lambda * e_p / p;
    const cplx a21 = -1.0 / pbar, a22 = mu * e_q / pbar;
    const cplx det_ac = a11 * a22 - a12 * a21;
    const cplx a = (a22 - a12) / det_ac;
    const cplx c = (a11 - a21) / det_ac;

    // (b, d) system: rows [lambda^-1 e^{-i theta}/p, -1/p], rhs 1.
    const cplx b11 = (1.0 / lambda) / e_p / p, b12 = -1.0 / p;
    const cplx b21 = (1.0 / mu) / e_q / pbar, b22 = -1.0 / pbar;
    const cplx det_bd = b11 * b22 - b12 * b21;
    const cplx b = (b22 - b12) / det_bd;
    const cplx d = (b11 - b21) / det_bd;
    return {a, b, c, d};
}

// The rotating-magnetization solution generated by the one-soliton with
// p = i*alpha, lambda = -1:
//   S1 = 2 cos(2 a^2 t) th sech, S2 = -2 sin(2 a^2 t) th sech, S3 = 2 sech^2 - 1
// with th = tanh(2 a x), sech = sech(2 a x).
inline solfac::SpinVector rotating_spin(double alpha, double x, double t) {
    const double th = std::tanh(2.0 * alpha * x);
    const double sech = 1.0 / std::cosh(2.0 * alpha * x);
    const double w = 2.0 * alpha * alpha * t;
    solfac::SpinVector s;
    s.s1 = 2.0 * std::cos(w) * th * sech;
    s.s2 = -2.0 * std::sin(w) * th * sech;
    s.s3 = 2.0 * sech * sech - 1.0;
    return s;
}

inline solfac::C2Matrix spin_matrix_of(const solfac::SpinVector& v) {
    return solfac::C2Matrix(v.s3, cplx(v.s1, -v.s2), cplx(v.s1, v.s2), -v.s3);
}

inline solfac::C2Matrix rotating_spin_matrix(double alpha, double x, double t) {
    return spin_matrix_of(rotating_spin(alpha, x, t));
}

// Analytic x-derivative of the rotating field.
inline solfac::C2Matrix rotating_spin_dx(double alpha, double x, double t) {
    const double th = std::tanh(2.0 * alpha * x);
    const double sech = 1.0 / std::cosh(2.0 * alpha * x);
    const double w = 2.0 * alpha * alpha * t;
    const double d_thsech = 2.0 * alpha * sech * (sech * sech - th * th);
    solfac::SpinVector s;
    s.s1 = 2.0 * std::cos(w) * d_thsech;
    s.s2 = -2.0 * std::sin(w) * d_thsech;
    s.s3 = -8.0 * alpha * sech * sech * th;
    return spin_matrix_of(s);
}

// Random spectral data with all invariants satisfied; resamples on the rare
// near-collision draw.
inline solfac::SpectralData random_spectral(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> radius(0.3, 0.8);
    std::uniform_real_distribution<double> angle(0.2, M_PI - 0.2);
    std::uniform_real_distribution<double> lambda_mod(0.5, 1.8);
    std::uniform_real_distribution<double> lambda_arg(-M_PI, M_PI);
    std::bernoulli_distribution lower_half(0.5);
    for (;;) {
        solfac::SpectralData d;
        for (std::size_t j = 0; j < n; ++j) {
            const double r = radius(rng);
            const double th = angle(rng);
            double im = r * std::sin(th);
            if (lower_half(rng)) im = -im;
            d.pairs.push_back(
                {cplx(r * std::cos(th), im), std::polar(lambda_mod(rng), lambda_arg(rng))});
        }
        try {
            solfac::validate(d);
            return d;
        } catch (const solfac::Error&) {
            // collision; draw again
        }
    }
}

}  // namespace oracles
