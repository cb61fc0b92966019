#pragma once

// Sampled fields over a GridSpec, stored t-major (node (i, j) at j * nx + i),
// and the samplers that fill them from spectral data or closures.

#include <functional>
#include <vector>

#include "solfac/baker.hpp"
#include "solfac/gauge_map.hpp"
#include "solfac/grid.hpp"
#include "solfac/spectral_data.hpp"

namespace solfac {

struct NlsField {
    GridSpec grid;
    std::vector<cplx> u;

    const cplx& at(std::size_t i, std::size_t j) const { return u[j * grid.nx + i]; }
    cplx& at(std::size_t i, std::size_t j) { return u[j * grid.nx + i]; }
};

struct SpinField {
    GridSpec grid;
    std::vector<SpinVector> s;

    const SpinVector& at(std::size_t i, std::size_t j) const { return s[j * grid.nx + i]; }
    SpinVector& at(std::size_t i, std::size_t j) { return s[j * grid.nx + i]; }
};

// Time convention of a spin field.  The factorization-native field obeys
// S_t = (1/2) S x S_xx; sampling it at (x, 2t) removes the 1/2.
enum class HmConvention { Half, Unit };

NlsField sample_nls_field(const SpectralData& data, const GridSpec& grid,
                          const SolverTolerances& tol = {});
NlsField sample_nls_field(const std::function<cplx(double, double)>& u, const GridSpec& grid);

SpinField sample_hm_field(const SpectralData& data, const GridSpec& grid,
                          HmConvention convention = HmConvention::Half,
                          const SolverTolerances& tol = {});
SpinField sample_hm_field(const std::function<SpinVector(double, double)>& s,
                          const GridSpec& grid);

}  // namespace solfac
