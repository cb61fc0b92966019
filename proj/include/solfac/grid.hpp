#pragma once

// Uniform (x, t) grids and the report structure shared by all residual
// measurements.

#include <cstddef>
#include <optional>
#include <string>

#include "solfac/errors.hpp"

namespace solfac {

struct GridSpec {
    double xmin = -5.0, xmax = 5.0;
    std::size_t nx = 201;
    double tmin = -1.0, tmax = 1.0;
    std::size_t nt = 101;

    // Throws GridTooSmall / ValidationError when the bounds or counts are bad.
    void validate() const;

    double hx() const { return (xmax - xmin) / static_cast<double>(nx - 1); }
    double ht() const { return (tmax - tmin) / static_cast<double>(nt - 1); }
    double x(std::size_t i) const { return xmin + static_cast<double>(i) * hx(); }
    double t(std::size_t j) const { return tmin + static_cast<double>(j) * ht(); }
    std::size_t nodes() const { return nx * nt; }

    // Same extents with both steps halved (nx, nt -> 2n - 1).
    GridSpec refined() const;
};

struct ResidualReport {
    std::string quantity;
    double max_norm = 0.0;
    double rms_norm = 0.0;
    double hx = 0.0;
    double ht = 0.0;
    std::optional<double> observed_order;
    std::string notes;
};

// log2(coarse.max_norm / fine.max_norm).  Requires that fine halves both
// steps of coarse (throws RefinementMismatch otherwise); returns nullopt when
// either norm is exactly zero, since no order can be observed then.
std::optional<double> convergence_order(const ResidualReport& coarse, const ResidualReport& fine);

}  // namespace solfac
