#include "solfac/baker.hpp"

#include <algorithm>
#include <cmath>

namespace solfac {

namespace {

struct RowFactor {
    cplx value;   // scaled exponential multiplier
    double scale; // the row scale actually applied (1 when no rescaling)
};

// scale * m * e^{s i theta} with s = +-1, computed in log space.  Rows whose
// multiplier exceeds unit modulus are rescaled to unit modulus: this keeps
// every entry bounded (no overflow however large |Im theta| grows), keeps the
// rows comparably sized so the pivot tolerance stays meaningful, and row
// scaling leaves the solution of the system unchanged.
RowFactor scaled_exponential(cplx m, cplx theta, int s) {
    const double log_mod = std::log(std::abs(m)) - static_cast<double>(s) * theta.imag();
    const double log_scale = log_mod > 0.0 ? -log_mod : 0.0;
    const cplx phase_only = m / std::abs(m);
    const cplx expo =
        std::exp(cplx(log_mod + log_scale, static_cast<double>(s) * theta.real()));
    return {phase_only * expo, std::exp(log_scale)};
}

// Shared assembly of the two systems.  For kind = AC the unknowns are
// (a_1..a_n, c_1..c_n) and the exponential multiplier is lambda e^{+i theta};
// for kind = BD they are (b_1..b_n, d_1..d_n) with lambda^-1 e^{-i theta}.
enum class SystemKind { AC, BD };

std::pair<CMatrix, std::vector<cplx>> assemble(const SpectralData& data, double x, double t,
                                               SystemKind kind) {
    const std::size_t n = data.n();
    CMatrix m(2 * n, 2 * n);
    std::vector<cplx> rhs(2 * n);

    for (std::size_t row = 0; row < 2 * n; ++row) {
        const bool conj_row = row >= n;
        const std::size_t j = conj_row ? row - n : row;
        const cplx p = conj_row ? std::conj(data.pairs[j].p) : data.pairs[j].p;
        const cplx lam =
            conj_row ? derived_mu(data.pairs[j].lambda) : data.pairs[j].lambda;
        const cplx theta = phase(p, x, t);

        const RowFactor f = kind == SystemKind::AC ? scaled_exponential(lam, theta, +1)
                                                   : scaled_exponential(1.0 / lam, theta, -1);

        const cplx q = 1.0 / p;
        cplx qk = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            qk *= q;
            // first block: the tail coefficients of the same function as the
            // normalization (a for AC, d for BD) enter with -q^k
            if (kind == SystemKind::AC) {
                m.at(row, k) = -qk * f.scale;       // a_k
                m.at(row, n + k) = f.value * qk;    // c_k
            } else {
                m.at(row, k) = f.value * qk;        // b_k
                m.at(row, n + k) = -qk * f.scale;   // d_k
            }
        }
        rhs[row] = f.scale;
    }
    return {std::move(m), std::move(rhs)};
}

}  // namespace

std::pair<CMatrix, std::vector<cplx>> assemble_ac_system(const SpectralData& data, double x,
                                                         double t) {
    return assemble(data, x, t, SystemKind::AC);
}

std::pair<CMatrix, std::vector<cplx>> assemble_bd_system(const SpectralData& data, double x,
                                                         double t) {
    return assemble(data, x, t, SystemKind::BD);
}

BakerCoefficients solve_baker(const SpectralData& data, double x, double t,
                              const SolverTolerances& tol) {
    const std::size_t n = data.n();
    BakerCoefficients out;
    out.n = n;
    if (n == 0) return out;

    auto [mac, rac] = assemble_ac_system(data, x, t);
    auto [mbd, rbd] = assemble_bd_system(data, x, t);
    const LuFactorization lu_ac(std::move(mac), tol.rel_pivot);
    const LuFactorization lu_bd(std::move(mbd), tol.rel_pivot);
    const std::vector<cplx> ac = lu_ac.solve(std::move(rac));
    const std::vector<cplx> bd = lu_bd.solve(std::move(rbd));

    out.cond_ac = lu_ac.condition_estimate();
    out.cond_bd = lu_bd.condition_estimate();
    out.ill_conditioned = out.cond_ac > tol.ill_condition || out.cond_bd > tol.ill_condition;

    out.a.assign(ac.begin(), ac.begin() + static_cast<std::ptrdiff_t>(n));
    out.c.assign(ac.begin() + static_cast<std::ptrdiff_t>(n), ac.end());
    out.b.assign(bd.begin(), bd.begin() + static_cast<std::ptrdiff_t>(n));
    out.d.assign(bd.begin() + static_cast<std::ptrdiff_t>(n), bd.end());

    // The two systems are solved independently, so c_k = -conj(b_k) and
    // d_k = conj(a_k) arrive as a measurement of assembly consistency, not as
    // an assumption.  Record the deviation, then enforce symmetrically.
    double dev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        dev = std::max(dev, std::abs(out.c[k] + std::conj(out.b[k])));
        dev = std::max(dev, std::abs(out.d[k] - std::conj(out.a[k])));
    }
    out.structure_residual = dev;
    if (dev > tol.structure_violation) {
        throw StructureViolation("solve_baker: structural identities off by " +
                                 std::to_string(dev));
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx b_avg = 0.5 * (out.b[k] - std::conj(out.c[k]));
        const cplx a_avg = 0.5 * (out.a[k] + std::conj(out.d[k]));
        out.b[k] = b_avg;
        out.c[k] = -std::conj(b_avg);
        out.a[k] = a_avg;
        out.d[k] = std::conj(a_avg);
    }
    return out;
}

LaurentMatrix g_minus(const BakerCoefficients& coeffs, double structure_tol) {
    if (coeffs.structure_residual > structure_tol) {
        throw StructureViolation("g_minus: structural residual " +
                                 std::to_string(coeffs.structure_residual) + " exceeds " +
                                 std::to_string(structure_tol));
    }
    const int n = static_cast<int>(coeffs.n);
    LaurentMatrix g(-n, 0);
    g.set_coeff(0, C2Matrix::identity());
    for (int k = 1; k <= n; ++k) {
        const cplx a = coeffs.a[static_cast<std::size_t>(k - 1)];
        const cplx b = coeffs.b[static_cast<std::size_t>(k - 1)];
        g.set_coeff(-k, C2Matrix(a, b, -std::conj(b), std::conj(a)));
    }
    return g;
}

std::array<cplx, 2> baker_eval(const BakerFunctions& f, cplx z, BakerIndex which) {
    if (z == cplx(0.0)) throw ZeroArgument("baker_eval: z = 0");
    const std::size_t n = f.coeffs.n;
    const cplx zinv = 1.0 / z;
    cplx tail_top = 0.0, tail_bot = 0.0;
    cplx zk = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        zk *= zinv;
        if (which == BakerIndex::Psi1) {
            tail_top += f.coeffs.a[k] * zk;
            tail_bot += f.coeffs.c[k] * zk;
        } else {
            tail_top += f.coeffs.b[k] * zk;
            tail_bot += f.coeffs.d[k] * zk;
        }
    }
    const cplx w = cplx(0, 1) * (f.x * z + f.t * z * z);
    const cplx e_minus = std::exp(-w);
    const cplx e_plus = std::exp(w);
    if (which == BakerIndex::Psi1) return {(1.0 + tail_top) * e_minus, tail_bot * e_plus};
    return {tail_top * e_minus, (1.0 + tail_bot) * e_plus};
}

cplx nls_field(const SpectralData& data, double x, double t) {
    const BakerCoefficients c = solve_baker(data, x, t);
    return c.n > 0 ? c.b[0] : cplx(0.0);
}

std::pair<cplx, cplx> one_soliton_closed_form(const SolitonParams& sp, double x, double t) {
    const double alpha = sp.alpha;
    const double beta = sp.beta;
    const double u = 2.0 * beta * (x + 2.0 * alpha * t + sp.x0);
    const double th = std::tanh(u);
    const double sech = 1.0 / std::cosh(u);
    const cplx a = cplx(-alpha, -beta * th);
    const cplx envelope =
        std::exp(cplx(0.0, 2.0 * (alpha * x + (alpha * alpha - beta * beta) * t + sp.phi)));
    const cplx b = cplx(0.0, beta) * envelope * sech;
    return {a, b};
}

cplx nsoliton_determinant_b1(const SpectralData& data, double x, double t, double rel_pivot_tol) {
    const std::size_t n = data.n();
    if (n == 0) return 0.0;
    CMatrix delta(2 * n, 2 * n);
    CMatrix delta1(2 * n, 2 * n);

    for (std::size_t row = 0; row < 2 * n; ++row) {
        const bool conj_row = row >= n;
        const std::size_t j = conj_row ? row - n : row;
        const cplx p = conj_row ? std::conj(data.pairs[j].p) : data.pairs[j].p;
        const cplx lam = conj_row ? derived_mu(data.pairs[j].lambda) : data.pairs[j].lambda;
        const cplx theta = phase(p, x, t);
        const RowFactor f = scaled_exponential(1.0, theta, -1);

        const cplx q = 1.0 / p;
        cplx qk = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            qk *= q;
            delta.at(row, k) = f.value * qk;
            delta.at(row, n + k) = -lam * qk * f.scale;
            delta1.at(row, k) = delta.at(row, k);
            delta1.at(row, n + k) = delta.at(row, n + k);
        }
        delta1.at(row, 0) = lam * f.scale;  // numerator: column one replaced by the multipliers
    }

    // A tiny denominator pivot means the dataset sits outside the solvable
    // regime and throws; a vanishing numerator just means b_1 = 0.
    const cplx den = LuFactorization(std::move(delta), rel_pivot_tol).determinant();
    cplx num;
    try {
        num = LuFactorization(std::move(delta1), 0.0).determinant();
    } catch (const SingularSystem&) {
        num = 0.0;
    }
    return num / den;
}

}  // namespace solfac
