#ifndef DCOV_PIPELINE_HPP
#define DCOV_PIPELINE_HPP

#include <string>

#include "dcov/bundle.hpp"
#include "dcov/error.hpp"
#include "dcov/json_io.hpp"

namespace dcov::pipeline {

// Outcome of one command run. `output` is the full report (JSON text, or CSV
// for census runs that request it); `status` is ok when every pass/fail flag
// in the report is true, check_failed when the run completed with failures,
// and a specific error code when the run could not complete.
struct RunResult {
    ErrorCode status = ErrorCode::ok;
    std::string output;
};

RunResult run_lift(const AnyBundle& input, const std::string& input_digest, const json& params);
RunResult run_census(const json& params);
RunResult run_roundtrip(const json& params);
RunResult run_hilbert(const json& params);
RunResult run_gen(const json& params); // output is a bundle, not a report

std::string fnv1a64_hex(const std::string& data);

// Input parameter caps: everything stays desk-scale, exceeding them is an
// error rather than a hang. Derived degrees (products such as deg g = 2k)
// may exceed the base cap.
constexpr int cap_n = 4;
constexpr int cap_base_degree = 14;

} // namespace dcov::pipeline

#endif
