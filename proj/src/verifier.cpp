#include "solfac/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace solfac {

namespace {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 to_vec3(const SpinVector& s) { return {s.s1, s.s2, s.s3}; }

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ResidualReport nls_residual(const NlsField& field) {
    const GridSpec& g = field.grid;
    g.validate();
    if (field.u.size() != g.nodes()) throw ValidationError("nls_residual: field/grid mismatch");
    for (const cplx& v : field.u) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteSample("nls_residual: non-finite sample");
        }
    }

    const double inv_2ht = 1.0 / (2.0 * g.ht());
    const double inv_hx2 = 1.0 / (g.hx() * g.hx());
    double max_norm = 0.0;
    double sum_sq = 0.0;
    std::size_t interior = 0;

    for (std::size_t j = 1; j + 1 < g.nt; ++j) {
        for (std::size_t i = 1; i + 1 < g.nx; ++i) {
            const cplx u = field.at(i, j);
            const cplx ut = (field.at(i, j + 1) - field.at(i, j - 1)) * inv_2ht;
            const cplx uxx =
                (field.at(i + 1, j) - 2.0 * u + field.at(i - 1, j)) * inv_hx2;
            const cplx r = cplx(0, 1) * ut - 0.5 * uxx - 4.0 * u * std::norm(u);
            const double m = std::abs(r);
            max_norm = std::max(max_norm, m);
            sum_sq += m * m;
            ++interior;
        }
    }

    ResidualReport rep;
    rep.quantity = "nls_residual";
    rep.max_norm = max_norm;
    rep.rms_norm = std::sqrt(sum_sq / static_cast<double>(interior));
    rep.hx = g.hx();
    rep.ht = g.ht();
    return rep;
}

ResidualReport hm_residual(const SpinField& field, HmConvention convention) {
    const GridSpec& g = field.grid;
    g.validate();
    if (field.s.size() != g.nodes()) throw ValidationError("hm_residual: field/grid mismatch");

    const double c = convention == HmConvention::Half ? 0.5 : 1.0;
    const double inv_2ht = 1.0 / (2.0 * g.ht());
    const double inv_hx2 = 1.0 / (g.hx() * g.hx());
    double max_norm = 0.0;
    double sum_sq = 0.0;
    std::size_t interior = 0;

    for (std::size_t j = 1; j + 1 < g.nt; ++j) {
        for (std::size_t i = 1; i + 1 < g.nx; ++i) {
            const Vec3 s = to_vec3(field.at(i, j));
            const Vec3 up = to_vec3(field.at(i, j + 1));
            const Vec3 dn = to_vec3(field.at(i, j - 1));
            const Vec3 le = to_vec3(field.at(i - 1, j));
            const Vec3 ri = to_vec3(field.at(i + 1, j));

            const Vec3 st{(up.x - dn.x) * inv_2ht, (up.y - dn.y) * inv_2ht,
                          (up.z - dn.z) * inv_2ht};
            const Vec3 sxx{(ri.x - 2.0 * s.x + le.x) * inv_hx2,
                           (ri.y - 2.0 * s.y + le.y) * inv_hx2,
                           (ri.z - 2.0 * s.z + le.z) * inv_hx2};
            const Vec3 rhs = cross(s, sxx);
            const Vec3 r = st - Vec3{c * rhs.x, c * rhs.y, c * rhs.z};
            const double m = r.norm();
            max_norm = std::max(max_norm, m);
            sum_sq += m * m;
            ++interior;
        }
    }

    ResidualReport rep;
    rep.quantity = convention == HmConvention::Half ? "hm_residual[half]" : "hm_residual[unit]";
    rep.max_norm = max_norm;
    rep.rms_norm = std::sqrt(sum_sq / static_cast<double>(interior));
    rep.hx = g.hx();
    rep.ht = g.ht();
    return rep;
}

ResidualReport unit_norm_check(const SpinField& field) {
    const GridSpec& g = field.grid;
    if (field.s.size() != g.nodes()) throw ValidationError("unit_norm_check: field/grid mismatch");
    double max_dev = 0.0;
    double sum_sq = 0.0;
    for (const SpinVector& s : field.s) {
        const double d = s.norm_error();
        max_dev = std::max(max_dev, d);
        sum_sq += d * d;
    }
    ResidualReport rep;
    rep.quantity = "unit_norm";
    rep.max_norm = max_dev;
    rep.rms_norm = std::sqrt(sum_sq / static_cast<double>(field.s.size()));
    rep.hx = g.hx();
    rep.ht = g.ht();
    return rep;
}

std::vector<double> slice_masses(const NlsField& field, double boundary_tol) {
    const GridSpec& g = field.grid;
    g.validate();
    if (field.u.size() != g.nodes()) throw ValidationError("slice_masses: field/grid mismatch");
    std::vector<double> masses(g.nt);
    for (std::size_t j = 0; j < g.nt; ++j) {
        const double left = std::abs(field.at(0, j));
        const double right = std::abs(field.at(g.nx - 1, j));
        if (left >= boundary_tol || right >= boundary_tol) {
            throw BoundaryNotDecayed("slice_masses: |u| at the x boundary of slice " +
                                     std::to_string(j) + " is " +
                                     std::to_string(std::max(left, right)));
        }
        double m = 0.5 * (std::norm(field.at(0, j)) + std::norm(field.at(g.nx - 1, j)));
        for (std::size_t i = 1; i + 1 < g.nx; ++i) m += std::norm(field.at(i, j));
        masses[j] = m * g.hx();
    }
    return masses;
}

ResidualReport mass_conservation(const NlsField& field, double boundary_tol) {
    const std::vector<double> masses = slice_masses(field, boundary_tol);
    const double lo = *std::min_element(masses.begin(), masses.end());
    const double hi = *std::max_element(masses.begin(), masses.end());
    double mean = 0.0;
    for (double m : masses) mean += m;
    mean /= static_cast<double>(masses.size());
    double sum_sq = 0.0;
    for (double m : masses) sum_sq += (m - mean) * (m - mean);

    ResidualReport rep;
    rep.quantity = "mass_conservation";
    rep.max_norm = hi - lo;
    rep.rms_norm = std::sqrt(sum_sq / static_cast<double>(masses.size()));
    rep.hx = field.grid.hx();
    rep.ht = field.grid.ht();
    rep.notes = "mean_mass=" + format_g17(mean);
    return rep;
}

std::string residual_report_json(const ResidualReport& report) {
    nlohmann::ordered_json j{{"quantity", report.quantity},
                             {"max_norm", report.max_norm},
                             {"rms_norm", report.rms_norm},
                             {"hx", report.hx},
                             {"ht", report.ht}};
    if (report.observed_order) j["observed_order"] = *report.observed_order;
    else j["observed_order"] = nullptr;
    j["notes"] = report.notes;
    return j.dump();
}

}  // namespace solfac
