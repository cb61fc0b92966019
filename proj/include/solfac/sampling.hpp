#pragma once

// Config-driven grid sampling and the deterministic output writers.
// CSV headers are fixed byte-for-byte; floats are written with 17
// significant digits so values round-trip through text exactly.

#include <string>

#include "solfac/config.hpp"
#include "solfac/fields.hpp"

namespace solfac {

NlsField sample_nls(const RunConfig& cfg);
// Honors cfg.time_convention: Unit evaluates the native field at (x, 2t).
SpinField sample_hm(const RunConfig& cfg);

// Header "x,t,re_u,im_u,abs_u"; rows ordered t-major then x-minor.
std::string write_nls_csv(const NlsField& field);
// Header "x,t,s1,s2,s3,norm_err"; same ordering.
std::string write_hm_csv(const SpinField& field);

std::string write_nls_json(const NlsField& field);
std::string write_hm_json(const SpinField& field);

}  // namespace solfac
