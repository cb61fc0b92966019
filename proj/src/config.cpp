#include "solfac/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace solfac {

namespace {

struct KeyValue {
    std::string value;
    std::size_t line;
};

struct Section {
    std::string name;
    std::size_t line;
    std::map<std::string, KeyValue> entries;
};

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string drop_comment(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '#' || s[i] == ';') return s.substr(0, i);
    }
    return s;
}

std::vector<Section> tokenize(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(drop_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no);
            sections.push_back({strip(line.substr(1, line.size() - 2)), line_no, {}});
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", line_no, line.find_first_not_of(' ') + 1);
        }
        if (sections.empty()) throw ParseError("key outside any section", line_no);
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no);
        if (value.empty()) throw ParseError("empty value for key '" + key + "'", line_no);
        auto [it, inserted] = sections.back().entries.emplace(key, KeyValue{value, line_no});
        (void)it;
        if (!inserted) throw ParseError("duplicate key '" + key + "' in section", line_no);
    }
    return sections;
}

double parse_double(const KeyValue& kv, const std::string& key) {
    const char* begin = kv.value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ParseError("value of '" + key + "' is not a number: '" + kv.value + "'", kv.line);
    }
    return v;
}

std::size_t parse_count(const KeyValue& kv, const std::string& key) {
    const double v = parse_double(kv, key);
    if (v < 1.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw ParseError("value of '" + key + "' must be a positive integer", kv.line);
    }
    return static_cast<std::size_t>(v);
}

// Consumes entries as they are interpreted; anything left over is unknown.
class SectionReader {
public:
    explicit SectionReader(Section s) : s_(std::move(s)) {}

    KeyValue take(const std::string& key) {
        auto it = s_.entries.find(key);
        if (it == s_.entries.end()) {
            throw ParseError("section [" + s_.name + "] is missing key '" + key + "'", s_.line);
        }
        KeyValue kv = it->second;
        s_.entries.erase(it);
        return kv;
    }

    bool take_optional(const std::string& key, KeyValue& out) {
        auto it = s_.entries.find(key);
        if (it == s_.entries.end()) return false;
        out = it->second;
        s_.entries.erase(it);
        return true;
    }

    void finish() const {
        if (!s_.entries.empty()) {
            const auto& [key, kv] = *s_.entries.begin();
            throw ParseError("unknown key '" + key + "' in section [" + s_.name + "]", kv.line);
        }
    }

private:
    Section s_;
};

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::vector<SolitonParams> solitons;
    std::vector<SpectralPair> pairs;
    bool saw_grid = false, saw_run = false, saw_tol = false;

    for (Section& raw : tokenize(text)) {
        const std::size_t section_line = raw.line;
        const std::string name = raw.name;
        SectionReader sec(std::move(raw));

        if (name == "grid") {
            if (saw_grid) throw ParseError("duplicate [grid] section", section_line);
            saw_grid = true;
            KeyValue kv;
            if (sec.take_optional("xmin", kv)) cfg.grid.xmin = parse_double(kv, "xmin");
            if (sec.take_optional("xmax", kv)) cfg.grid.xmax = parse_double(kv, "xmax");
            if (sec.take_optional("nx", kv)) cfg.grid.nx = parse_count(kv, "nx");
            if (sec.take_optional("tmin", kv)) cfg.grid.tmin = parse_double(kv, "tmin");
            if (sec.take_optional("tmax", kv)) cfg.grid.tmax = parse_double(kv, "tmax");
            if (sec.take_optional("nt", kv)) cfg.grid.nt = parse_count(kv, "nt");
        } else if (name == "run") {
            if (saw_run) throw ParseError("duplicate [run] section", section_line);
            saw_run = true;
            KeyValue kv;
            if (sec.take_optional("time_convention", kv)) {
                if (kv.value == "half") cfg.time_convention = HmConvention::Half;
                else if (kv.value == "unit") cfg.time_convention = HmConvention::Unit;
                else throw ParseError("time_convention must be 'half' or 'unit'", kv.line);
            }
            if (sec.take_optional("output_format", kv)) {
                if (kv.value == "csv") cfg.output_format = OutputFormat::Csv;
                else if (kv.value == "json") cfg.output_format = OutputFormat::Json;
                else throw ParseError("output_format must be 'csv' or 'json'", kv.line);
            }
        } else if (name == "tolerances") {
            if (saw_tol) throw ParseError("duplicate [tolerances] section", section_line);
            saw_tol = true;
            KeyValue kv;
            if (sec.take_optional("rel_pivot", kv))
                cfg.solver_tol.rel_pivot = parse_double(kv, "rel_pivot");
            if (sec.take_optional("ill_condition", kv))
                cfg.solver_tol.ill_condition = parse_double(kv, "ill_condition");
            if (sec.take_optional("structure_violation", kv))
                cfg.solver_tol.structure_violation = parse_double(kv, "structure_violation");
            if (sec.take_optional("boundary_decay", kv))
                cfg.boundary_decay = parse_double(kv, "boundary_decay");
        } else if (name == "soliton") {
            SolitonParams sp;
            sp.alpha = parse_double(sec.take("alpha"), "alpha");
            sp.beta = parse_double(sec.take("beta"), "beta");
            sp.x0 = parse_double(sec.take("x0"), "x0");
            sp.phi = parse_double(sec.take("phi"), "phi");
            if (sp.beta == 0.0) throw ParseError("soliton beta must be nonzero", section_line);
            solitons.push_back(sp);
        } else if (name == "spectral") {
            SpectralPair p;
            p.p = cplx(parse_double(sec.take("re_p"), "re_p"),
                       parse_double(sec.take("im_p"), "im_p"));
            p.lambda = cplx(parse_double(sec.take("re_lambda"), "re_lambda"),
                            parse_double(sec.take("im_lambda"), "im_lambda"));
            pairs.push_back(p);
        } else {
            throw ParseError("unknown section [" + name + "]", section_line);
        }
        sec.finish();
    }

    if (!solitons.empty() && !pairs.empty()) {
        throw ParseError("ambiguous spectral source: both [soliton] and [spectral] given", 1);
    }
    if (solitons.empty() && pairs.empty()) {
        throw ParseError("no spectral source: give [soliton] or [spectral] sections", 1);
    }

    if (!solitons.empty()) {
        cfg.spectral = from_soliton_params(solitons);
    } else {
        cfg.spectral.pairs = std::move(pairs);
        validate(cfg.spectral);
    }
    cfg.grid.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_schema_help() {
    return R"(Config file schema (INI-style; '#' or ';' start a comment):

  [grid]                  # all keys optional
  xmin = -5.0             # defaults shown
  xmax = 5.0
  nx   = 201              # integer >= 5
  tmin = -1.0
  tmax = 1.0
  nt   = 101              # integer >= 5

  [run]                   # optional
  time_convention = half  # half | unit (spin-field time convention)
  output_format   = csv   # csv | json

  [tolerances]            # optional; only these keys may be overridden
  rel_pivot           = 1e-14
  ill_condition       = 1e12
  structure_violation = 1e-6
  boundary_decay      = 1e-8

  # exactly one of the two families below; repeat a section per soliton
  [soliton]
  alpha = 0.0             # p = alpha + i*beta, 0 < |p| < 1, beta != 0
  beta  = 0.4
  x0    = 0.0             # lambda = exp(-2*beta*x0 + 2i*phi)
  phi   = 0.0

  [spectral]
  re_p      = 0.0         # point in the punctured unit disk, Im p != 0
  im_p      = 0.4
  re_lambda = 1.0         # lambda != 0
  im_lambda = 0.0
)";
}

}  // namespace solfac
