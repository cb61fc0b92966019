#pragma once

// Run configuration: a flat INI-style file with [grid], [run], [tolerances]
// and exactly one family of repeatable [soliton] or [spectral] sections.
// Unknown sections or keys are rejected with the offending line.

#include <string>

#include "solfac/baker.hpp"
#include "solfac/fields.hpp"
#include "solfac/grid.hpp"
#include "solfac/spectral_data.hpp"

namespace solfac {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    SpectralData spectral;  // already validated
    GridSpec grid;          // defaults: x in [-5, 5] x 201, t in [-1, 1] x 101
    HmConvention time_convention = HmConvention::Half;
    OutputFormat output_format = OutputFormat::Csv;
    SolverTolerances solver_tol;
    double boundary_decay = 1e-8;
};

// Throws ParseError (with line) on syntax/schema problems and the spectral
// validation errors (PointOutsideDisk, ...) on bad data.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// The documented schema, printed by the CLI's --help-config.
std::string config_schema_help();

}  // namespace solfac
