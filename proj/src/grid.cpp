#include "solfac/grid.hpp"

#include <cmath>

namespace solfac {

void GridSpec::validate() const {
    if (!(xmax > xmin)) throw ValidationError("GridSpec: xmax must exceed xmin");
    if (!(tmax > tmin)) throw ValidationError("GridSpec: tmax must exceed tmin");
    if (nx < 5 || nt < 5) {
        throw GridTooSmall("GridSpec: need at least 5 nodes per axis, got nx=" +
                           std::to_string(nx) + " nt=" + std::to_string(nt));
    }
}

GridSpec GridSpec::refined() const {
    GridSpec r = *this;
    r.nx = 2 * nx - 1;
    r.nt = 2 * nt - 1;
    return r;
}

std::optional<double> convergence_order(const ResidualReport& coarse, const ResidualReport& fine) {
    const auto halves = [](double h_coarse, double h_fine) {
        return std::abs(h_fine - 0.5 * h_coarse) <= 1e-9 * std::abs(h_coarse);
    };
    if (!halves(coarse.hx, fine.hx) || !halves(coarse.ht, fine.ht)) {
        throw RefinementMismatch("convergence_order: fine grid does not halve both steps (hx " +
                                 std::to_string(coarse.hx) + " -> " + std::to_string(fine.hx) +
                                 ", ht " + std::to_string(coarse.ht) + " -> " +
                                 std::to_string(fine.ht) + ")");
    }
    if (coarse.max_norm <= 0.0 || fine.max_norm <= 0.0) return std::nullopt;
    return std::log2(coarse.max_norm / fine.max_norm);
}

}  // namespace solfac
