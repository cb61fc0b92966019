#pragma once

// The transformation from the scalar flow to the spin field: extraction of
// B_0 from the leading Laurent coefficient, the conjugation S = B_0^-1 s3 B_0,
// and the equivalent closed scalar formula on the coefficient pairs.

#include "solfac/baker.hpp"
#include "solfac/loop_algebra.hpp"
#include "solfac/spectral_data.hpp"

namespace solfac {

// Hermitian, traceless, involutive 2x2 matrix; the matrix form of a unit spin.
struct SpinMatrix {
    C2Matrix m;

    // Validates all three invariants: Hermiticity and tracelessness to
    // hermitian_tol, S^2 = I to involution_tol.
    static SpinMatrix checked(const C2Matrix& m, double hermitian_tol = 1e-12,
                              double involution_tol = 1e-10);
};

struct SpinVector {
    double s1 = 0.0, s2 = 0.0, s3 = 1.0;

    double norm_error() const;  // |s1^2 + s2^2 + s3^2 - 1|
};

// Reads (S1, S2, S3) off S = [[S3, S1 - i S2], [S1 + i S2, -S3]].
SpinVector spin_components(const SpinMatrix& s);

// B_0(x, t) = A_N^-1(x, t) A_N(0, 0).
C2Matrix b0_matrix(const C2Matrix& a_n_now, const C2Matrix& a_n_init);

// S = B_0^-1 sigma3 B_0.
SpinMatrix spin_matrix(const C2Matrix& b0);

// Closed form of the conjugation on G-form inputs A_N = [[a, b], [-conj b, conj a]]:
//   D  = (|a|^2 + |b|^2)(|a0|^2 + |b0|^2)
//   S3 = [(|a|^2 - |b|^2)(|a0|^2 - |b0|^2) + 4 Re(a b conj(a0 b0))] / D
//   S1 + i S2 = 2 [(|a|^2 - |b|^2) a0 conj(b0) + a b conj(b0)^2 - conj(a b) a0^2] / D
// The denominator is the product of the two determinants |a|^2 + |b|^2; with
// difference-form denominators the map would fail both S(0,0) = sigma3 and
// |S| = 1 (the matrix conjugation above is the authoritative reference).
// Throws DegenerateInput when either pair has norm below 1e-14.
SpinVector spin_vector_scalar(cplx a, cplx b, cplx a0, cplx b0);

// Full composition: solve at (x, t) and (0, 0), take the z^-n coefficients,
// apply the scalar map.
SpinVector hm_field(const SpectralData& data, double x, double t);

// Same composition with the (0, 0) solve cached; use this for grid sweeps.
class HmFieldEvaluator {
public:
    explicit HmFieldEvaluator(SpectralData data, const SolverTolerances& tol = {});
    SpinVector operator()(double x, double t) const;

    const SpectralData& data() const { return data_; }
    cplx a_init() const { return a0_; }
    cplx b_init() const { return b0_; }

private:
    SpectralData data_;
    SolverTolerances tol_;
    cplx a0_, b0_;
};

}  // namespace solfac
