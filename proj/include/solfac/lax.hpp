#pragma once

// Lax pairs for the scalar and spin flows and the grid evaluation of the
// zero-curvature residual  dM1/dt - dM2/dx + [M1, M2]  per power of z.

#include <functional>
#include <vector>

#include "solfac/baker.hpp"
#include "solfac/fields.hpp"
#include "solfac/gauge_map.hpp"
#include "solfac/grid.hpp"
#include "solfac/loop_algebra.hpp"

namespace solfac {

struct LaxPair {
    LaurentMatrix m1;  // polynomial of degree <= 1 in z
    LaurentMatrix m2;  // polynomial of degree <= 2 in z
};

// M1 = sigma z + 2 [[0, i b1], [i conj(b1), 0]]
// M2 = sigma z^2 + (same z^0 block of M1) z
//        + 2 [[-i |b1|^2, v], [-conj(v), i |b1|^2]],  v = i (b2 - a1 b1).
// Coefficients beyond the stored tail (e.g. b2 when n = 1) enter as zero.
LaxPair nls_lax_pair(const BakerCoefficients& coeffs);

// M1 = i S z,  M2 = i S z^2 + (1/2) (S Sx) z, where Sx is the spatial
// derivative of S.  The sign of the z-coefficient of M2 is fixed by the
// requirement that the z^2 component of the zero-curvature equation,
// -i Sx + (1/2)[S, S Sx] = 0, holds identically for S^2 = I (which gives
// [S, S Sx] = 2 Sx).
LaxPair hm_lax_pair(const SpinMatrix& s, const C2Matrix& sx);

struct LaxPairField {
    GridSpec grid;
    std::vector<LaxPair> pairs;  // t-major, node (i, j) at j * nx + i
    std::string sx_mode;         // for spin pairs: "analytic" or "central-differences"

    const LaxPair& at(std::size_t i, std::size_t j) const { return pairs[j * grid.nx + i]; }
};

LaxPairField sample_nls_lax_field(const SpectralData& data, const GridSpec& grid);

// Spin pair field with Sx from second-order differences of the sampled spin
// matrices (one-sided at the x boundary, central inside).
LaxPairField sample_hm_lax_field(const SpectralData& data, const GridSpec& grid);

// Spin pair field from closed-form S and Sx.
LaxPairField sample_hm_lax_field(const std::function<C2Matrix(double, double)>& s,
                                 const std::function<C2Matrix(double, double)>& sx,
                                 const GridSpec& grid);

// Central second-order differences on interior nodes; boundary nodes are
// excluded from the norms.  One report per power of z (z^0 .. z^3), each
// carrying the max and RMS Frobenius norms of that residual coefficient.
std::vector<ResidualReport> zcc_residual(const LaxPairField& field);

}  // namespace solfac
