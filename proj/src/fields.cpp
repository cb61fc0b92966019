#include "solfac/fields.hpp"

#include <string>

namespace solfac {

namespace {

// Solver failures during a sweep are re-raised with the grid point attached.
[[noreturn]] void rethrow_at(const NumericalError& e, double x, double t) {
    throw NumericalError("at (x=" + std::to_string(x) + ", t=" + std::to_string(t) +
                         "): " + e.what());
}

}  // namespace

NlsField sample_nls_field(const SpectralData& data, const GridSpec& grid,
                          const SolverTolerances& tol) {
    grid.validate();
    validate(data);
    NlsField f{grid, std::vector<cplx>(grid.nodes())};
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            try {
                const BakerCoefficients c = solve_baker(data, grid.x(i), grid.t(j), tol);
                f.at(i, j) = c.n > 0 ? c.b[0] : cplx(0.0);
            } catch (const NumericalError& e) {
                rethrow_at(e, grid.x(i), grid.t(j));
            }
        }
    }
    return f;
}

NlsField sample_nls_field(const std::function<cplx(double, double)>& u, const GridSpec& grid) {
    grid.validate();
    NlsField f{grid, std::vector<cplx>(grid.nodes())};
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) f.at(i, j) = u(grid.x(i), grid.t(j));
    }
    return f;
}

SpinField sample_hm_field(const SpectralData& data, const GridSpec& grid,
                          HmConvention convention, const SolverTolerances& tol) {
    grid.validate();
    const HmFieldEvaluator eval(data, tol);
    const double time_scale = convention == HmConvention::Unit ? 2.0 : 1.0;
    SpinField f{grid, std::vector<SpinVector>(grid.nodes())};
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            try {
                f.at(i, j) = eval(grid.x(i), time_scale * grid.t(j));
            } catch (const NumericalError& e) {
                rethrow_at(e, grid.x(i), grid.t(j));
            }
        }
    }
    return f;
}

SpinField sample_hm_field(const std::function<SpinVector(double, double)>& s,
                          const GridSpec& grid) {
    grid.validate();
    SpinField f{grid, std::vector<SpinVector>(grid.nodes())};
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) f.at(i, j) = s(grid.x(i), grid.t(j));
    }
    return f;
}

}  // namespace solfac
