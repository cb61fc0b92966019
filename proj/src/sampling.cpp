#include "solfac/sampling.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace solfac {

namespace {

using json = nlohmann::ordered_json;

void append_g17(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

json grid_json(const GridSpec& g) {
    return json{{"xmin", g.xmin}, {"xmax", g.xmax}, {"nx", g.nx},
                {"tmin", g.tmin}, {"tmax", g.tmax}, {"nt", g.nt}};
}

}  // namespace

NlsField sample_nls(const RunConfig& cfg) {
    return sample_nls_field(cfg.spectral, cfg.grid, cfg.solver_tol);
}

SpinField sample_hm(const RunConfig& cfg) {
    return sample_hm_field(cfg.spectral, cfg.grid, cfg.time_convention, cfg.solver_tol);
}

std::string write_nls_csv(const NlsField& field) {
    std::string out = "x,t,re_u,im_u,abs_u\n";
    const GridSpec& g = field.grid;
    for (std::size_t j = 0; j < g.nt; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const cplx u = field.at(i, j);
            append_g17(out, g.x(i));
            out += ',';
            append_g17(out, g.t(j));
            out += ',';
            append_g17(out, u.real());
            out += ',';
            append_g17(out, u.imag());
            out += ',';
            append_g17(out, std::abs(u));
            out += '\n';
        }
    }
    return out;
}

std::string write_hm_csv(const SpinField& field) {
    std::string out = "x,t,s1,s2,s3,norm_err\n";
    const GridSpec& g = field.grid;
    for (std::size_t j = 0; j < g.nt; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const SpinVector& s = field.at(i, j);
            append_g17(out, g.x(i));
            out += ',';
            append_g17(out, g.t(j));
            out += ',';
            append_g17(out, s.s1);
            out += ',';
            append_g17(out, s.s2);
            out += ',';
            append_g17(out, s.s3);
            out += ',';
            append_g17(out, s.norm_error());
            out += '\n';
        }
    }
    return out;
}

std::string write_nls_json(const NlsField& field) {
    const GridSpec& g = field.grid;
    json rows = json::array();
    for (std::size_t j = 0; j < g.nt; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const cplx u = field.at(i, j);
            rows.push_back(json{{"x", g.x(i)},
                                {"t", g.t(j)},
                                {"re_u", u.real()},
                                {"im_u", u.imag()},
                                {"abs_u", std::abs(u)}});
        }
    }
    json doc{{"schema_version", 1}, {"kind", "nls_field"}, {"grid", grid_json(g)},
             {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

std::string write_hm_json(const SpinField& field) {
    const GridSpec& g = field.grid;
    json rows = json::array();
    for (std::size_t j = 0; j < g.nt; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const SpinVector& s = field.at(i, j);
            rows.push_back(json{{"x", g.x(i)},
                                {"t", g.t(j)},
                                {"s1", s.s1},
                                {"s2", s.s2},
                                {"s3", s.s3},
                                {"norm_err", s.norm_error()}});
        }
    }
    json doc{{"schema_version", 1}, {"kind", "hm_field"}, {"grid", grid_json(g)},
             {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

}  // namespace solfac
