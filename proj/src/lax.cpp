#include "solfac/lax.hpp"

#include <cmath>

namespace solfac {

namespace {

C2Matrix offdiag_ib(cplx b1) {
    const cplx ib = cplx(0, 1) * b1;
    return C2Matrix(0.0, ib, -std::conj(ib), 0.0);
}

C2Matrix spin_matrix_of(const SpinVector& v) {
    return C2Matrix(v.s3, cplx(v.s1, -v.s2), cplx(v.s1, v.s2), -v.s3);
}

}  // namespace

LaxPair nls_lax_pair(const BakerCoefficients& coeffs) {
    const cplx a1 = coeffs.n >= 1 ? coeffs.a[0] : cplx(0.0);
    const cplx b1 = coeffs.n >= 1 ? coeffs.b[0] : cplx(0.0);
    const cplx b2 = coeffs.n >= 2 ? coeffs.b[1] : cplx(0.0);

    const C2Matrix u0 = 2.0 * offdiag_ib(b1);
    const cplx v = cplx(0, 1) * (b2 - a1 * b1);
    const double b1sq = std::norm(b1);
    const C2Matrix w0 = 2.0 * C2Matrix(cplx(0, -b1sq), v, -std::conj(v), cplx(0, b1sq));

    LaxPair pair;
    pair.m1 = LaurentMatrix(0, 1);
    pair.m1.set_coeff(1, C2Matrix::sigma());
    pair.m1.set_coeff(0, u0);

    pair.m2 = LaurentMatrix(0, 2);
    pair.m2.set_coeff(2, C2Matrix::sigma());
    pair.m2.set_coeff(1, u0);
    pair.m2.set_coeff(0, w0);
    return pair;
}

LaxPair hm_lax_pair(const SpinMatrix& s, const C2Matrix& sx) {
    const cplx i1 = cplx(0, 1);
    LaxPair pair;
    pair.m1 = LaurentMatrix::monomial(i1 * s.m, 1);
    pair.m2 = LaurentMatrix(1, 2);
    pair.m2.set_coeff(2, i1 * s.m);
    pair.m2.set_coeff(1, 0.5 * mat_mul(s.m, sx));
    return pair;
}

LaxPairField sample_nls_lax_field(const SpectralData& data, const GridSpec& grid) {
    grid.validate();
    validate(data);
    LaxPairField f{grid, {}, ""};
    f.pairs.reserve(grid.nodes());
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            f.pairs.push_back(nls_lax_pair(solve_baker(data, grid.x(i), grid.t(j))));
        }
    }
    return f;
}

LaxPairField sample_hm_lax_field(const SpectralData& data, const GridSpec& grid) {
    grid.validate();
    const HmFieldEvaluator eval(data);
    std::vector<C2Matrix> s(grid.nodes());
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            s[j * grid.nx + i] = spin_matrix_of(eval(grid.x(i), grid.t(j)));
        }
    }

    // Second-order Sx: central inside, one-sided at the two x edges.
    const double hx = grid.hx();
    LaxPairField f{grid, {}, "central-differences"};
    f.pairs.reserve(grid.nodes());
    for (std::size_t j = 0; j < grid.nt; ++j) {
        const C2Matrix* row = &s[j * grid.nx];
        for (std::size_t i = 0; i < grid.nx; ++i) {
            C2Matrix sx;
            if (i == 0) {
                sx = (1.0 / (2.0 * hx)) * (-3.0 * row[0] + 4.0 * row[1] - row[2]);
            } else if (i == grid.nx - 1) {
                sx = (1.0 / (2.0 * hx)) *
                     (3.0 * row[i] - 4.0 * row[i - 1] + row[i - 2]);
            } else {
                sx = (1.0 / (2.0 * hx)) * (row[i + 1] - row[i - 1]);
            }
            f.pairs.push_back(hm_lax_pair(SpinMatrix{row[i]}, sx));
        }
    }
    return f;
}

LaxPairField sample_hm_lax_field(const std::function<C2Matrix(double, double)>& s,
                                 const std::function<C2Matrix(double, double)>& sx,
                                 const GridSpec& grid) {
    grid.validate();
    LaxPairField f{grid, {}, "analytic"};
    f.pairs.reserve(grid.nodes());
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            const double t = grid.t(j);
            f.pairs.push_back(hm_lax_pair(SpinMatrix{s(x, t)}, sx(x, t)));
        }
    }
    return f;
}

std::vector<ResidualReport> zcc_residual(const LaxPairField& field) {
    const GridSpec& g = field.grid;
    g.validate();
    if (field.pairs.size() != g.nodes()) {
        throw ValidationError("zcc_residual: field size does not match the grid");
    }

    constexpr int kMaxPower = 3;
    std::vector<double> max_norm(kMaxPower + 1, 0.0);
    std::vector<double> sum_sq(kMaxPower + 1, 0.0);
    const double inv_2ht = 1.0 / (2.0 * g.ht());
    const double inv_2hx = 1.0 / (2.0 * g.hx());
    std::size_t interior = 0;

    for (std::size_t j = 1; j + 1 < g.nt; ++j) {
        for (std::size_t i = 1; i + 1 < g.nx; ++i) {
            const LaxPair& here = field.at(i, j);
            const LaurentMatrix comm = laurent_commutator(here.m1, here.m2);
            ++interior;
            for (int k = 0; k <= kMaxPower; ++k) {
                const C2Matrix dm1_dt =
                    inv_2ht * (field.at(i, j + 1).m1.coeff(k) - field.at(i, j - 1).m1.coeff(k));
                const C2Matrix dm2_dx =
                    inv_2hx * (field.at(i + 1, j).m2.coeff(k) - field.at(i - 1, j).m2.coeff(k));
                const C2Matrix r = dm1_dt - dm2_dx + comm.coeff(k);
                const double fro = r.frobenius_norm();
                max_norm[static_cast<std::size_t>(k)] =
                    std::max(max_norm[static_cast<std::size_t>(k)], fro);
                sum_sq[static_cast<std::size_t>(k)] += fro * fro;
            }
        }
    }

    std::vector<ResidualReport> reports;
    for (int k = 0; k <= kMaxPower; ++k) {
        ResidualReport r;
        r.quantity = "zcc[z^" + std::to_string(k) + "]";
        r.max_norm = max_norm[static_cast<std::size_t>(k)];
        r.rms_norm = std::sqrt(sum_sq[static_cast<std::size_t>(k)] /
                               static_cast<double>(interior));
        r.hx = g.hx();
        r.ht = g.ht();
        r.notes = field.sx_mode.empty() ? "" : "sx=" + field.sx_mode;
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace solfac
