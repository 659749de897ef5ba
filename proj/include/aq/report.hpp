#pragma once

#include "aq/oracles.hpp"
#include "aq/series.hpp"

#include <string>
#include <vector>

namespace aq {

struct JobConfig {
    std::string command;
    std::string input_path; /* empty for em-series / phi */
    std::string input_text; /* parsed instead of the path when set */
    uint32_t p = 2;
    int q = 1;
    int n = 2;
    int N = 4;
    int W = -1; /* default: max(12, 2 * max var weight, max relation weight) */
    int T = 10;
    int n_max = -1; /* envelope chain cap; default min(N-2, 3) */
    std::vector<double> tau;
    std::string format = "text"; /* text | json */
    std::string out_path;
    uint64_t seed = 0; /* corpus generation only */
    bool corrupt_face = false; /* fault injection for the exit-code-2 path */
};

struct Report {
    JobConfig config;
    std::string json;   /* canonical machine-readable form (no timing) */
    std::string text;   /* human-readable form, includes timing */
    double elapsed_sec = 0.0;
    int exit_code = 0;  /* 2 when a reported computation breached an invariant */
};

/* Run one job. Domain errors and invariant violations propagate as
 * aq::Error; the CLI maps them to exit codes 1 and 2. */
Report run(const JobConfig& cfg);

} // namespace aq
