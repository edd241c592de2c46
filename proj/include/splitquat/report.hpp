#ifndef SPLITQUAT_REPORT_HPP
#define SPLITQUAT_REPORT_HPP

#include <array>
#include <cstdint>
#include <string>

#include "splitquat/factorization.hpp"

namespace splitquat {

/// Parsed command-line / JSON job description.
struct JobSpec {
    std::array<double, 4> a{}, b{}, c{};
    double tolerance = 1e-9;
    bool enumerate_all = false;
    bool verify = false;
    std::uint32_t seed = 12345;
    enum class Format { Text, Json } format = Format::Text;
};

struct OracleEvidence {
    bool ran = false;
    bool zero_found = false;
    SplitQuaternion zero;
    double residual = 0.0;
};

struct Report {
    JobSpec job;
    Poly input;
    FactorizationOutcome outcome;
    OracleEvidence oracle;      // populated when job.verify is set
    double elapsed_ms = 0.0;
    int exit_code = 0;          // 0 factorizable, 1 not factorizable
};

/// Runs the factorization engine on the job; attaches verification when
/// requested.  Input errors (zero leading coefficient) throw
/// std::invalid_argument, which the CLI maps to exit status 2.
Report run(const JobSpec& job);

std::string to_json(const Report& report);
std::string to_text(const Report& report);

} // namespace splitquat

#endif
