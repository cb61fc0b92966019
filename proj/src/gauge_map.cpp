#include "solfac/gauge_map.hpp"

#include <cmath>
#include <string>

namespace solfac {

SpinMatrix SpinMatrix::checked(const C2Matrix& m, double hermitian_tol, double involution_tol) {
    const C2Matrix herm_dev = m - m.adjoint();
    if (herm_dev.max_abs() > hermitian_tol) {
        throw StructureViolation("SpinMatrix: not Hermitian, deviation " +
                                 std::to_string(herm_dev.max_abs()));
    }
    if (std::abs(m.trace()) > hermitian_tol) {
        throw StructureViolation("SpinMatrix: trace " + std::to_string(std::abs(m.trace())));
    }
    const C2Matrix invol_dev = mat_mul(m, m) - C2Matrix::identity();
    if (invol_dev.max_abs() > involution_tol) {
        throw StructureViolation("SpinMatrix: S^2 - I deviation " +
                                 std::to_string(invol_dev.max_abs()));
    }
    return SpinMatrix{m};
}

double SpinVector::norm_error() const {
    return std::abs(s1 * s1 + s2 * s2 + s3 * s3 - 1.0);
}

SpinVector spin_components(const SpinMatrix& s) {
    SpinVector v;
    v.s3 = s.m.at(0, 0).real();
    v.s1 = s.m.at(1, 0).real();
    v.s2 = s.m.at(1, 0).imag();
    return v;
}

C2Matrix b0_matrix(const C2Matrix& a_n_now, const C2Matrix& a_n_init) {
    return mat_mul(mat_inv(a_n_now), a_n_init);
}

SpinMatrix spin_matrix(const C2Matrix& b0) {
    const C2Matrix s = mat_mul(mat_inv(b0), mat_mul(C2Matrix::pauli3(), b0));
    return SpinMatrix::checked(s);
}

SpinVector spin_vector_scalar(cplx a, cplx b, cplx a0, cplx b0) {
    const double det_now = std::norm(a) + std::norm(b);
    const double det_init = std::norm(a0) + std::norm(b0);
    if (det_now < 1e-14 || det_init < 1e-14) {
        throw DegenerateInput("spin_vector_scalar: coefficient pair too close to zero");
    }
    const double delta_now = std::norm(a) - std::norm(b);
    const double delta_init = std::norm(a0) - std::norm(b0);
    const double inv_d = 1.0 / (det_now * det_init);

    const cplx ab = a * b;
    const cplx a0b0 = a0 * b0;

    SpinVector v;
    v.s3 = (delta_now * delta_init + 4.0 * std::real(ab * std::conj(a0b0))) * inv_d;
    const cplx transverse =
        2.0 * (delta_now * a0 * std::conj(b0) + ab * std::conj(b0) * std::conj(b0) -
               std::conj(ab) * a0 * a0) * inv_d;
    v.s1 = transverse.real();
    v.s2 = transverse.imag();
    return v;
}

SpinVector hm_field(const SpectralData& data, double x, double t) {
    return HmFieldEvaluator(data)(x, t);
}

HmFieldEvaluator::HmFieldEvaluator(SpectralData data, const SolverTolerances& tol)
    : data_(std::move(data)), tol_(tol) {
    validate(data_);
    if (data_.n() == 0) throw DegenerateInput("hm_field: empty spectral data");
    const BakerCoefficients init = solve_baker(data_, 0.0, 0.0, tol_);
    a0_ = init.a.back();
    b0_ = init.b.back();
}

SpinVector HmFieldEvaluator::operator()(double x, double t) const {
    const BakerCoefficients now = solve_baker(data_, x, t, tol_);
    return spin_vector_scalar(now.a.back(), now.b.back(), a0_, b0_);
}

}  // namespace solfac
