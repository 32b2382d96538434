#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "winkit/window.hpp"

namespace winkit {

/// One measured metric, optionally paired with its published reference
/// value. delta is present iff paper_value is present.
struct ReportRow {
    std::string window_name;
    int m = 0;
    std::string parameters;
    std::string metric_name;
    double measured = 0.0;
    std::optional<double> paper_value;
    std::optional<double> delta;
};

struct ReproOptions {
    int table = 1;            ///< 1: window metrics, 2: FIR stopband attenuations
    int n_fft = 0;            ///< 0 picks the per-table default (512 / 2048)
    bool extended = false;    ///< include the length-47 companion rows of table 1
    double beta = 6.0;        ///< Kaiser row parameter
    double sigma = 0.373;     ///< Gaussian row parameter
    double atten = -48.0;     ///< Dolph-Chebyshev design sidelobe
};

struct ReproResult {
    std::vector<ReportRow> rows;
    bool all_within_tolerance = true;
};

/// Reproduces the published comparison tables cell by cell.
ReproResult run_repro(const ReproOptions& options);

/// Lobe metrics (halfwidth, fullwidth, sidelobe peak, first null) for each
/// requested window, in input order.
std::vector<ReportRow> run_compare(const std::vector<WindowSpec>& specs, int n_fft);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Human-readable parameter summary of a spec ("beta=6", "" when none).
std::string describe_parameters(const WindowSpec& spec);

void write_rows_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_rows_json(std::ostream& out, const std::vector<ReportRow>& rows);

/// Per-metric acceptance tolerance used by run_repro.
double repro_tolerance(int table, const std::string& metric_name);

}  // namespace winkit
