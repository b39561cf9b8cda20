// report.hpp — invariant report rendering, the two reference tables, and the
// bundled self-test.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

enum class ReportFormat { pretty, tsv, json };
ReportFormat parse_report_format(std::string_view name); // throws bad_params

// Full invariant report for N = 4; negativity-only report otherwise.
// Output is deterministic: identical input and format give identical bytes.
std::string render_report(const PureState& state, std::string_view state_name,
                          ReportFormat format);

struct TableResult {
    std::string text;
    int mismatches = 0; // cells differing from the bundled reference values
    std::vector<std::string> mismatch_cells; // "row:column" descriptors
};

// Reference tables over the preset catalog; cells that do not reproduce the
// bundled reference value within 1e-9 are marked in the text (they are data,
// not errors).
TableResult render_table1();
TableResult render_table2();

struct SelftestResult {
    std::string text;
    int failures = 0;
};

// Bundled identity and reproduction checks; `samples` controls the randomized
// suites (0 runs only the deterministic ones).
SelftestResult run_selftest(std::uint64_t seed, int samples);

// Same, over a caller-provided catalog (test hook for corrupted presets).
SelftestResult run_selftest_with_catalog(
    std::uint64_t seed, int samples,
    const std::vector<std::pair<std::string, PureState>>& catalog);

std::string format_complex(cdouble z, int significant = 12); // "re+imi"
std::string format_real(double v, int significant = 12);

} // namespace negfont
