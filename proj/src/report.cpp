#include "winkit/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "winkit/errors.hpp"
#include "winkit/fir.hpp"
#include "winkit/spectrum.hpp"

namespace winkit {

namespace {

// Published reference values the repro command regresses against, with the
// tolerance policy kept beside the data.
constexpr double kSidelobeToleranceDb = 0.3;
constexpr double kWidthToleranceOverPi = 2.0 / 256.0;  // two bins of the 512-point grid
constexpr double kStopbandToleranceDb = 1.5;

struct WindowReference {
    int m;
    double sidelobe_db;
    double fullwidth_over_pi;
};

// Window-domain comparison table: -3 dB full width (units of pi) and
// normalized side-lobe peak, on the 512-sample grid.
constexpr WindowReference kProposedReference[] = {
    {10, -58.44563, 0.28906},
    {14, -52.62333, 0.20313},
    {50, -48.46017, 0.050781},
};
constexpr WindowReference kHammingReference[] = {
    {10, -35.82400, 0.27344},
    {14, -38.85582, 0.1875},
    {50, -42.47663, 0.05078},
};
// Companion pairing at nearly equal width but length 47.
constexpr WindowReference kHamming47Reference = {47, -42.23333, 0.050781};

// FIR stopband attenuation table at cutoff 0.2*pi, lengths M+1.
constexpr int kFilterLengths[] = {50, 70, 100, 200};
struct FilterReference {
    WindowKind kind;
    double stopband_db[4];
};
constexpr FilterReference kFilterReference[] = {
    {WindowKind::Hamming, {-51.37, -52.09, -52.69, -53.55}},
    {WindowKind::Kaiser, {-66.61, -61.95, -62.22, -62.75}},
    {WindowKind::Gaussian, {-66.70, -66.09, -65.63, -65.36}},
    {WindowKind::DolphChebyshev, {-61.52, -61.39, -61.59, -63.88}},
    {WindowKind::Ref9, {-60.84, -61.37, -62.26, -62.11}},
    {WindowKind::Ref15, {-58.70, -59.10, -60.80, -60.68}},
    {WindowKind::Proposed, {-68.81, -67.97, -67.28, -66.56}},
};

constexpr double kTable2CutoffOverPi = 0.2;

ReportRow make_row(const WindowSpec& spec, const std::string& metric, double measured,
                   std::optional<double> paper_value = std::nullopt) {
    ReportRow row;
    row.window_name = std::string(to_string(spec.kind));
    row.m = spec.order;
    row.parameters = describe_parameters(spec);
    row.metric_name = metric;
    row.measured = measured;
    row.paper_value = paper_value;
    if (paper_value) row.delta = measured - *paper_value;
    return row;
}

WindowSpec table2_spec(WindowKind kind, int m, const ReproOptions& options) {
    WindowSpec spec{kind, m};
    switch (kind) {
        case WindowKind::Kaiser: spec.beta = options.beta; break;
        case WindowKind::Gaussian: spec.sigma = options.sigma; break;
        case WindowKind::DolphChebyshev: spec.sidelobe_db = options.atten; break;
        default: break;
    }
    return spec;
}

void append_table1_rows(std::vector<ReportRow>& rows, const WindowSpec& spec,
                        const WindowReference& ref, int n_fft) {
    const LobeMetrics metrics = lobe_metrics(magnitude_spectrum(generate(spec), n_fft));
    rows.push_back(make_row(spec, "fullwidth_3db", metrics.fullwidth_3db, ref.fullwidth_over_pi));
    rows.push_back(make_row(spec, "sidelobe_peak_db", metrics.sidelobe_peak_db, ref.sidelobe_db));
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string describe_parameters(const WindowSpec& spec) {
    switch (spec.kind) {
        case WindowKind::Kaiser:
            return spec.beta ? "beta=" + format_double(*spec.beta) : "";
        case WindowKind::Gaussian:
            return spec.sigma ? "sigma=" + format_double(*spec.sigma) : "";
        case WindowKind::Lanczos:
            return spec.power ? "L=" + std::to_string(*spec.power) : "";
        case WindowKind::DolphChebyshev:
            return spec.sidelobe_db ? "atten=" + format_double(*spec.sidelobe_db) : "";
        default:
            return "";
    }
}

double repro_tolerance(int table, const std::string& metric_name) {
    if (table == 2) return kStopbandToleranceDb;
    return metric_name == "fullwidth_3db" ? kWidthToleranceOverPi : kSidelobeToleranceDb;
}

ReproResult run_repro(const ReproOptions& options) {
    if (options.table != 1 && options.table != 2) {
        throw InvalidSpec("--table must be 1 or 2");
    }
    ReproResult result;

    if (options.table == 1) {
        const int n_fft = options.n_fft > 0 ? options.n_fft : 512;
        for (std::size_t i = 0; i < std::size(kProposedReference); ++i) {
            append_table1_rows(result.rows,
                               WindowSpec{WindowKind::Proposed, kProposedReference[i].m},
                               kProposedReference[i], n_fft);
            append_table1_rows(result.rows,
                               WindowSpec{WindowKind::Hamming, kHammingReference[i].m},
                               kHammingReference[i], n_fft);
        }
        if (options.extended) {
            append_table1_rows(result.rows,
                               WindowSpec{WindowKind::Hamming, kHamming47Reference.m},
                               kHamming47Reference, n_fft);
        }
    } else {
        const int n_fft = options.n_fft > 0 ? options.n_fft : 2048;
        const double cutoff = kTable2CutoffOverPi * M_PI;
        for (const FilterReference& ref : kFilterReference) {
            for (std::size_t i = 0; i < std::size(kFilterLengths); ++i) {
                const WindowSpec spec = table2_spec(ref.kind, kFilterLengths[i], options);
                const FirFilter filter = design_fir(generate(spec), cutoff);
                const FilterMetrics metrics = filter_metrics(filter, n_fft);
                result.rows.push_back(make_row(spec, "stopband_peak_db",
                                               metrics.stopband_peak_db, ref.stopband_db[i]));
            }
        }
    }

    for (const ReportRow& row : result.rows) {
        const double tolerance = repro_tolerance(options.table, row.metric_name);
        if (row.delta && std::fabs(*row.delta) > tolerance) {
            result.all_within_tolerance = false;
        }
    }
    return result;
}

std::vector<ReportRow> run_compare(const std::vector<WindowSpec>& specs, int n_fft) {
    std::vector<ReportRow> rows;
    for (const WindowSpec& spec : specs) {
        const LobeMetrics metrics = lobe_metrics(magnitude_spectrum(generate(spec), n_fft));
        rows.push_back(make_row(spec, "halfwidth_3db", metrics.halfwidth_3db));
        rows.push_back(make_row(spec, "fullwidth_3db", metrics.fullwidth_3db));
        rows.push_back(make_row(spec, "sidelobe_peak_db", metrics.sidelobe_peak_db));
        rows.push_back(make_row(spec, "first_null", metrics.first_null));
    }
    return rows;
}

void write_rows_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "window_name,M,parameters,metric_name,measured,paper_value,delta\n";
    for (const ReportRow& row : rows) {
        out << row.window_name << ',' << row.m << ',' << row.parameters << ','
            << row.metric_name << ',' << format_double(row.measured) << ',';
        if (row.paper_value) out << format_double(*row.paper_value);
        out << ',';
        if (row.delta) out << format_double(*row.delta);
        out << '\n';
    }
}

void write_rows_json(std::ostream& out, const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const ReportRow& row : rows) {
        nlohmann::ordered_json item;
        item["window_name"] = row.window_name;
        item["M"] = row.m;
        item["parameters"] = row.parameters;
        item["metric_name"] = row.metric_name;
        item["measured"] = row.measured;
        if (row.paper_value) {
            item["paper_value"] = *row.paper_value;
            item["delta"] = *row.delta;
        }
        list.push_back(std::move(item));
    }
    out << list.dump(2) << '\n';
}

}  // namespace winkit
