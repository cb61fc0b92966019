#include <doctest.h>

#include <cmath>
#include <random>

#include "solfac/spectral_data.hpp"

using namespace solfac;

TEST_SUITE("spectral_data") {

TEST_CASE("validation accepts good data and names the offender otherwise") {
    SpectralData ok;
    ok.pairs = {{cplx(0.5, 0.4), cplx(1.0)}};
    CHECK_NOTHROW(validate(ok));

    SpectralData outside;
    outside.pairs = {{cplx(1.2, 0.1), cplx(1.0)}};
    CHECK_THROWS_AS(validate(outside), PointOutsideDisk);

    SpectralData origin;
    origin.pairs = {{cplx(0.0, 0.0), cplx(1.0)}};
    CHECK_THROWS_AS(validate(origin), Error);  // |p| = 0 is outside the punctured disk

    SpectralData real_pt;
    real_pt.pairs = {{cplx(0.5, 0.0), cplx(1.0)}};
    CHECK_THROWS_AS(validate(real_pt), RealSpectralPoint);

    SpectralData conj_collision;
    conj_collision.pairs = {{cplx(0.3, 0.2), cplx(1.0)}, {cplx(0.3, -0.2), cplx(2.0)}};
    try {
        validate(conj_collision);
        FAIL("expected DuplicatePoint");
    } catch (const DuplicatePoint& e) {
        CHECK(e.index >= 1);
    }

    SpectralData near_dup;
    near_dup.pairs = {{cplx(0.3, 0.2), cplx(1.0)}, {cplx(0.3, 0.2 + 5e-7), cplx(2.0)}};
    CHECK_THROWS_AS(validate(near_dup), DuplicatePoint);

    SpectralData zero_lambda;
    zero_lambda.pairs = {{cplx(0.3, 0.2), cplx(0.0)}};
    CHECK_THROWS_AS(validate(zero_lambda), ZeroLambda);
}

TEST_CASE("derived_mu") {
    CHECK(std::abs(derived_mu(cplx(-1.0)) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(derived_mu(cplx(0, 1)) - cplx(0, -1)) < 1e-15);
    CHECK_THROWS_AS(derived_mu(cplx(0.0)), ZeroLambda);

    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 500; ++i) {
        const cplx lam(u(rng), u(rng));
        if (std::abs(lam) < 1e-3) continue;
        const cplx mu = derived_mu(lam);
        CHECK(std::abs(lam * std::conj(mu) + 1.0) < 1e-14);          // defining relation
        CHECK(std::abs(derived_mu(mu) - lam) < 1e-13);               // involution
    }
    CHECK(std::abs(std::abs(derived_mu(std::polar(1.0, 0.7))) - 1.0) < 1e-15);
}

TEST_CASE("from_soliton_params") {
    const SpectralData d1 = from_soliton_params({0.0, 0.4, 0.0, M_PI / 2});
    CHECK(std::abs(d1.pairs[0].p - cplx(0, 0.4)) < 1e-15);
    CHECK(std::abs(d1.pairs[0].lambda - cplx(-1.0)) < 1e-15);

    const SpectralData d2 = from_soliton_params({0.3, 0.5, 0.0, 0.0});
    CHECK(std::abs(d2.pairs[0].p - cplx(0.3, 0.5)) < 1e-15);
    CHECK(std::abs(d2.pairs[0].lambda - cplx(1.0)) < 1e-15);

    CHECK_THROWS_AS(from_soliton_params({0.0, 2.0, 0.0, 0.0}), PointOutsideDisk);

    // beta < 0 is a valid conjugate soliton
    CHECK_NOTHROW(from_soliton_params({0.1, -0.4, 0.3, 0.2}));
}

TEST_CASE("soliton parameters round-trip through the spectral pair") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> ua(-0.4, 0.4), ub(0.1, 0.6), ux(-2.0, 2.0),
        uphi(-1.5, 1.5);
    for (int i = 0; i < 200; ++i) {
        SolitonParams sp{ua(rng), ub(rng), ux(rng), uphi(rng)};
        if (std::abs(cplx(sp.alpha, sp.beta)) >= 0.999) continue;
        const SpectralData d = from_soliton_params(sp);
        const cplx p = d.pairs[0].p;
        const cplx lam = d.pairs[0].lambda;
        const double beta = p.imag();
        CHECK(std::abs(p.real() - sp.alpha) < 1e-12);
        CHECK(std::abs(beta - sp.beta) < 1e-12);
        CHECK(std::abs(-std::log(std::abs(lam)) / (2.0 * beta) - sp.x0) < 1e-12);
        CHECK(std::abs(0.5 * std::arg(lam) - sp.phi) < 1e-12);
    }
}

TEST_CASE("phase") {
    CHECK(std::abs(phase(cplx(0.7, -0.3), 0.0, 0.0)) == 0.0);
    CHECK(std::abs(phase(cplx(0, 0.4), 1.0, 0.0) - cplx(0, 0.8)) < 1e-15);
    CHECK(std::abs(phase(cplx(0, 0.4), 0.0, 1.0) - cplx(-0.32, 0)) < 1e-15);

    std::mt19937 rng(47);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        const cplx p(u(rng), u(rng));
        const double x = u(rng), t = u(rng);
        CHECK(std::abs(phase(std::conj(p), x, t) - std::conj(phase(p, x, t))) < 1e-13);
    }
}

}  // TEST_SUITE
