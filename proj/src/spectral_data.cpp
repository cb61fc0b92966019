#include "solfac/spectral_data.hpp"

#include <cmath>
#include <string>

namespace solfac {

namespace {

constexpr double kMinImag = 1e-8;       // real points collapse the conjugate pair of conditions
constexpr double kMinSeparation = 1e-6;  // closer points make the systems ill-conditioned

std::string idx(std::size_t j) { return "pair " + std::to_string(j); }

}  // namespace

void validate(const SpectralData& data) {
    const std::size_t n = data.n();
    for (std::size_t j = 0; j < n; ++j) {
        const cplx p = data.pairs[j].p;
        const double r = std::abs(p);
        if (!(r > 0.0 && r < 1.0)) {
            throw PointOutsideDisk(idx(j + 1) + ": |p| = " + std::to_string(r) +
                                       " outside the punctured open unit disk",
                                   j + 1);
        }
        if (std::abs(p.imag()) <= kMinImag) {
            throw RealSpectralPoint(idx(j + 1) + ": |Im p| = " + std::to_string(std::abs(p.imag())) +
                                        " too close to the real axis",
                                    j + 1);
        }
        if (std::abs(data.pairs[j].lambda) == 0.0) {
            throw ZeroLambda(idx(j + 1) + ": lambda = 0", j + 1);
        }
    }
    // Pairwise distinctness over {p_j} and {conj(p_j)} for distinct indices;
    // a p_i = conj(p_j) collision is just as fatal as p_i = p_j, since both
    // interpolation points coincide.  The i = j self-pairing is the real-axis
    // condition and is governed by the |Im p| tolerance above, so that
    // near-vacuum solitons with tiny Im p remain admissible.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const cplx pi = data.pairs[i].p;
            const cplx pj = data.pairs[j].p;
            if (std::abs(pi - pj) <= kMinSeparation) {
                throw DuplicatePoint(idx(j + 1) + ": p coincides with p of " + idx(i + 1), j + 1);
            }
            if (std::abs(pi - std::conj(pj)) <= kMinSeparation) {
                throw DuplicatePoint(idx(j + 1) + ": conj(p) coincides with p of " + idx(i + 1),
                                     j + 1);
            }
        }
    }
}

cplx derived_mu(cplx lambda) {
    if (lambda == cplx(0.0)) throw ZeroLambda("derived_mu: lambda = 0", 0);
    return -1.0 / std::conj(lambda);
}

SpectralData from_soliton_params(const SolitonParams& sp) {
    return from_soliton_params(std::vector<SolitonParams>{sp});
}

SpectralData from_soliton_params(const std::vector<SolitonParams>& sps) {
    SpectralData data;
    data.pairs.reserve(sps.size());
    for (const auto& sp : sps) {
        const cplx p(sp.alpha, sp.beta);
        const cplx lambda = std::exp(cplx(-2.0 * sp.beta * sp.x0, 2.0 * sp.phi));
        data.pairs.push_back({p, lambda});
    }
    validate(data);
    return data;
}

cplx phase(cplx p, double x, double t) { return 2.0 * (x * p + t * p * p); }

}  // namespace solfac
