#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "solfac/lax.hpp"

using namespace solfac;

namespace {

bool anti_hermitian(const C2Matrix& c, double tol) {
    return (c.adjoint() + c).max_abs() <= tol;
}

}  // namespace

TEST_SUITE("lax_zcc") {

TEST_CASE("vacuum pair") {
    const LaxPair p = nls_lax_pair(BakerCoefficients{});
    CHECK((p.m1.coeff(1) - C2Matrix::sigma()).max_abs() == 0.0);
    CHECK(p.m1.coeff(0).max_abs() == 0.0);
    CHECK((p.m2.coeff(2) - C2Matrix::sigma()).max_abs() == 0.0);
    CHECK(p.m2.coeff(1).max_abs() == 0.0);
    CHECK(p.m2.coeff(0).max_abs() == 0.0);
}

TEST_CASE("scalar pair blocks carry 2i b1 and the |b1|^2 diagonal") {
    const SpectralData d = from_soliton_params({0.2, 0.45, 0.0, 0.3});
    const BakerCoefficients c = solve_baker(d, 0.7, -0.4);
    const LaxPair p = nls_lax_pair(c);

    const cplx b1 = c.b[0];
    CHECK(std::abs(p.m1.coeff(0).at(0, 1) - cplx(0, 2) * b1) < 1e-14);
    CHECK(std::abs(p.m1.coeff(0).at(1, 0) - cplx(0, 2) * std::conj(b1)) < 1e-14);
    CHECK((p.m2.coeff(1) - p.m1.coeff(0)).max_abs() == 0.0);

    // z^0 diagonal of M2: -+ 2i |b1|^2, purely imaginary
    const cplx d11 = p.m2.coeff(0).at(0, 0);
    const cplx d22 = p.m2.coeff(0).at(1, 1);
    CHECK(std::abs(d11 - cplx(0, -2.0 * std::norm(b1))) < 1e-14);
    CHECK(std::abs(d22 - cplx(0, 2.0 * std::norm(b1))) < 1e-14);
    CHECK(std::abs(d11.real()) < 1e-15);

    SUBCASE("one-soliton substitutes b2 = a2 = 0 in v = i(b2 - a1 b1)") {
        const cplx v_expected = cplx(0, 1) * (-c.a[0] * c.b[0]);
        CHECK(std::abs(p.m2.coeff(0).at(0, 1) - 2.0 * v_expected) < 1e-14);
    }

    SUBCASE("every coefficient is anti-Hermitian") {
        for (int k = 0; k <= 1; ++k) CHECK(anti_hermitian(p.m1.coeff(k), 1e-12));
        for (int k = 0; k <= 2; ++k) CHECK(anti_hermitian(p.m2.coeff(k), 1e-12));
    }
}

TEST_CASE("spin pair") {
    SUBCASE("spin-up vacuum gives (sigma z, sigma z^2)") {
        const LaxPair p = hm_lax_pair(SpinMatrix{C2Matrix::pauli3()}, C2Matrix::zero());
        CHECK((p.m1.coeff(1) - C2Matrix::sigma()).max_abs() == 0.0);
        CHECK((p.m2.coeff(2) - C2Matrix::sigma()).max_abs() == 0.0);
        CHECK(p.m2.coeff(1).max_abs() == 0.0);
    }

    SUBCASE("rotating example at x = 0: S = e3 and the z coefficient carries S Sx") {
        const double al = 0.4, t = 0.3;
        const C2Matrix s = oracles::rotating_spin_matrix(al, 0.0, t);
        const C2Matrix sx = oracles::rotating_spin_dx(al, 0.0, t);
        CHECK((s - C2Matrix::pauli3()).max_abs() < 1e-14);
        const LaxPair p = hm_lax_pair(SpinMatrix{s}, sx);
        CHECK(p.m1.k_min() == 1);  // M1 is the single monomial iS z
        CHECK((p.m1.coeff(1) - cplx(0, 1) * s).max_abs() == 0.0);
        CHECK((p.m2.coeff(2) - cplx(0, 1) * s).max_abs() == 0.0);
        CHECK((p.m2.coeff(1) - 0.5 * mat_mul(s, sx)).max_abs() == 0.0);
        CHECK(p.m2.coeff(1).max_abs() > 0.1);  // the sech-derivative term is present
    }

    SUBCASE("all coefficients are traceless") {
        const double al = 0.5;
        for (double x : {-1.0, 0.3, 2.0}) {
            const C2Matrix s = oracles::rotating_spin_matrix(al, x, 0.7);
            const C2Matrix sx = oracles::rotating_spin_dx(al, x, 0.7);
            const LaxPair p = hm_lax_pair(SpinMatrix{s}, sx);
            CHECK(std::abs(p.m1.coeff(1).trace()) < 1e-12);
            CHECK(std::abs(p.m2.coeff(2).trace()) < 1e-12);
            CHECK(std::abs(p.m2.coeff(1).trace()) < 1e-12);
        }
    }
}

TEST_CASE("zero-curvature residual") {
    SUBCASE("a constant vacuum pair has exactly zero residual") {
        GridSpec g{-1.0, 1.0, 7, -1.0, 1.0, 7};
        LaxPairField f{g, std::vector<LaxPair>(g.nodes(), nls_lax_pair(BakerCoefficients{})), ""};
        for (const auto& rep : zcc_residual(f)) {
            CHECK(rep.max_norm == 0.0);
            CHECK(rep.rms_norm == 0.0);
        }
    }

    SUBCASE("grid too small is rejected") {
        GridSpec g;
        g.nx = 3;
        LaxPairField f{g, {}, ""};
        CHECK_THROWS_AS(zcc_residual(f), GridTooSmall);
    }

    SUBCASE("scalar-pair residual decays at second order; top powers vanish") {
        const SpectralData d =
            from_soliton_params({{0.3, 0.5, 0.0, 0.7}, {-0.2, 0.35, 0.4, 0.0}});
        const GridSpec coarse{-5.0, 5.0, 101, -1.0, 1.0, 51};
        const auto r_coarse = zcc_residual(sample_nls_lax_field(d, coarse));
        const auto r_fine = zcc_residual(sample_nls_lax_field(d, coarse.refined()));
        for (int k : {0, 1}) {
            const auto order = convergence_order(r_coarse[static_cast<std::size_t>(k)],
                                                 r_fine[static_cast<std::size_t>(k)]);
            REQUIRE(order.has_value());
            CHECK(*order == doctest::Approx(2.0).epsilon(0.25));
        }
        CHECK(r_coarse[2].max_norm < 1e-12);
        CHECK(r_coarse[3].max_norm < 1e-12);
        CHECK(r_fine[3].max_norm < 1e-12);
    }

    SUBCASE("spin-pair residual from analytic fields decays at second order") {
        const double al = 0.45;
        const auto s_fn = [al](double x, double t) { return oracles::rotating_spin_matrix(al, x, t); };
        const auto sx_fn = [al](double x, double t) { return oracles::rotating_spin_dx(al, x, t); };
        const GridSpec coarse{-4.0, 4.0, 81, -1.0, 1.0, 41};
        const auto r_coarse = zcc_residual(sample_hm_lax_field(s_fn, sx_fn, coarse));
        const auto r_fine = zcc_residual(sample_hm_lax_field(s_fn, sx_fn, coarse.refined()));
        CHECK(r_coarse[0].notes == "sx=analytic");
        for (int k : {1, 2}) {
            const auto order = convergence_order(r_coarse[static_cast<std::size_t>(k)],
                                                 r_fine[static_cast<std::size_t>(k)]);
            REQUIRE(order.has_value());
            CHECK(*order == doctest::Approx(2.0).epsilon(0.25));
        }
        CHECK(r_fine[3].max_norm < 1e-12);
    }

    SUBCASE("spin-pair residual from solver fields with difference Sx") {
        const SpectralData d = from_soliton_params({0.2, 0.45, 0.1, 0.2});
        const GridSpec coarse{-4.0, 4.0, 81, -1.0, 1.0, 41};
        const auto r_coarse = zcc_residual(sample_hm_lax_field(d, coarse));
        const auto r_fine = zcc_residual(sample_hm_lax_field(d, coarse.refined()));
        CHECK(r_coarse[1].notes == "sx=central-differences");
        for (int k : {1, 2}) {
            const auto order = convergence_order(r_coarse[static_cast<std::size_t>(k)],
                                                 r_fine[static_cast<std::size_t>(k)]);
            REQUIRE(order.has_value());
            CHECK(*order == doctest::Approx(2.0).epsilon(0.25));
        }
    }
}

}  // TEST_SUITE
