#pragma once

// Command layer behind the `unity` binary. Kept in the library so tests can
// drive it with in-memory streams.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "unity/error.hpp"

namespace unity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitUsage = 3;

enum class OutputFormat { text, csv, json };

/// InvalidArgument for anything but "text", "csv" or "json".
OutputFormat parse_format(std::string_view s);

struct RouteResult {
    std::string name;    // "direct", "poly" or "perm"
    std::string result;  // exact "numerator/denominator"
    bool pass = false;
    std::string detail;  // first mismatch, empty on pass
    double elapsed_ms = 0.0;
};

struct RunReport {
    unsigned n = 0;
    std::vector<RouteResult> routes;

    bool pass() const;
};

/// 0 when every route passed, 2 otherwise.
int exit_code(const RunReport& report);

/// Writes the deterministic part of the report (no timings).
void write_report(std::ostream& out, const RunReport& report, OutputFormat format);

/// One stderr-style line per route with elapsed milliseconds.
void write_timings(std::ostream& err, const RunReport& report);

RunReport run_verify(unsigned n, unsigned max_n, unsigned threads);

/// Routes are any subset of {"direct", "poly", "perm"}, executed in that
/// order. RangeError when perm is requested above the census bound.
RunReport run_oracle(unsigned n, const std::vector<std::string>& routes, unsigned max_n, unsigned threads);

/// Streams the table rows; memory stays O(n) regardless of p(n).
void write_table(std::ostream& out, unsigned n, OutputFormat format, unsigned max_n);

void write_decomposition(std::ostream& out, unsigned n, OutputFormat format, bool sorted, unsigned max_n);

/// Full command line: `unity <table|verify|decompose|oracle> N [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unity::cli
