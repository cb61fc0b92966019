#pragma once

// Residual measurements certifying the PDE claims on sampled fields:
// the scalar equation i u_t - u_xx/2 - 4u|u|^2 = 0, the spin equation
// S_t = c S x S_xx (c = 1/2 native, c = 1 after time dilation), the unit-norm
// constraint, and mass conservation.

#include <vector>

#include "solfac/fields.hpp"
#include "solfac/grid.hpp"

namespace solfac {

// Central-difference residual of i u_t - u_xx/2 - 4u|u|^2 on interior nodes.
// Throws NonFiniteSample if any sample is not finite.
ResidualReport nls_residual(const NlsField& field);

// Central-difference residual of S_t - c (S x S_xx) with c = 1/2 (Half) or
// c = 1 (Unit); per-node Euclidean norm of the 3-vector residual.
ResidualReport hm_residual(const SpinField& field, HmConvention convention);

// max |s1^2 + s2^2 + s3^2 - 1| over all nodes.
ResidualReport unit_norm_check(const SpinField& field);

// Trapezoidal integral of |u|^2 over x, one value per time slice.
// Requires |u| < 1e-8 on both x boundaries of every slice
// (throws BoundaryNotDecayed), so the quadrature sees the whole mass.
std::vector<double> slice_masses(const NlsField& field, double boundary_tol = 1e-8);

// Reports the spread of the slice masses: max_norm = max - min across
// slices, rms_norm = RMS deviation from the mean; the mean itself is
// recorded in notes.
ResidualReport mass_conservation(const NlsField& field, double boundary_tol = 1e-8);

// JSON object with exactly the report fields (observed_order null when
// absent); keys lower_snake_case.
std::string residual_report_json(const ResidualReport& report);

}  // namespace solfac
