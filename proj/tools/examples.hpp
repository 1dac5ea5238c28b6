#pragma once

#include <stdexcept>
#include <string>

#include "report_io.hpp"

namespace cli {

struct GoldenMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExampleOptions {
    std::string name;  // sl3 | product | so2n
    int n = 5;         // so2n only; goldens ship for 3, 5, 10
    std::string goldens_dir = "goldens";
    bool write_golden = false;
    OutputConfig output;
};

// Regenerates the reference report for the named worked example, emits it,
// and diffs it against the shipped golden file. Every number in the report is
// recomputed and checked against its closed form before printing; a drifted
// value aborts with a numeric error rather than producing a wrong report.
void run_example(const ExampleOptions& opt);

}  // namespace cli
