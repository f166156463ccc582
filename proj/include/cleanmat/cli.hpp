#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cleanmat {

struct CliOptions {
    // Output is canonical (sorted keys, exact integers) whether or not this
    // is set; the flag is accepted so scripts can state their expectation.
    bool deterministic = false;
    // Overrides every search budget when set.
    std::optional<std::int64_t> budget;
    // Truncation length injected into series descriptors that omit theirs.
    int default_order = 8;
};

// Executes one JSON request and writes the JSON report to `out`, or a
// diagnostic line to `err`.  Returns the process exit code: 0 on success
// (negative verdicts included), 2 on malformed requests, 3 on budget or
// unsupported-ring rejections, 4 on certificate verification failures.
int run_request(const std::string& input, std::ostream& out, std::ostream& err,
                const CliOptions& opts = {});

}  // namespace cleanmat
