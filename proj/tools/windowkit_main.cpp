// Command-line front end: window generation, spectrum dumps, window
// comparison, low-pass FIR design, and regression against the published
// comparison tables. All outputs are plot-ready CSV or JSON on stdout.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "winkit/errors.hpp"
#include "winkit/fir.hpp"
#include "winkit/report.hpp"
#include "winkit/spectrum.hpp"
#include "winkit/window.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitUsage = 2;

struct WindowFlags {
    std::string window;
    int order = 0;
    double beta = -1.0;
    double sigma = -1.0;
    int power = 0;
    double atten = 0.0;
};

void add_parameter_flags(CLI::App* cmd, WindowFlags& flags) {
    cmd->add_option("--beta", flags.beta, "Kaiser shape parameter (>= 0)");
    cmd->add_option("--sigma", flags.sigma, "Gaussian width parameter (0 < sigma <= 0.5)");
    cmd->add_option("--L", flags.power, "Lanczos exponent (>= 1)");
    cmd->add_option("--atten", flags.atten, "Dolph-Chebyshev design sidelobe in dB (< 0)");
}

void add_window_flags(CLI::App* cmd, WindowFlags& flags) {
    cmd->add_option("--window", flags.window, "window family name")->required();
    cmd->add_option("-M", flags.order, "window order M (M+1 points)")->required();
    add_parameter_flags(cmd, flags);
}

winkit::WindowSpec to_spec(const WindowFlags& flags, const std::string& name) {
    const auto kind = winkit::parse_window_kind(name);
    if (!kind) throw winkit::InvalidSpec("unknown window name '" + name + "'");
    winkit::WindowSpec spec{*kind, flags.order};
    switch (*kind) {
        case winkit::WindowKind::Kaiser:
            if (flags.beta < 0.0) throw winkit::InvalidSpec("kaiser window requires --beta");
            spec.beta = flags.beta;
            break;
        case winkit::WindowKind::Gaussian:
            if (flags.sigma < 0.0) throw winkit::InvalidSpec("gaussian window requires --sigma");
            spec.sigma = flags.sigma;
            break;
        case winkit::WindowKind::Lanczos:
            if (flags.power < 1) throw winkit::InvalidSpec("lanczos window requires --L");
            spec.power = flags.power;
            break;
        case winkit::WindowKind::DolphChebyshev:
            if (!(flags.atten < 0.0)) throw winkit::InvalidSpec("dolph-chebyshev window requires --atten");
            spec.sidelobe_db = flags.atten;
            break;
        default:
            break;
    }
    return spec;
}

void print_pairs_csv(const char* a, const char* b,
                     const std::vector<std::pair<double, double>>& rows) {
    std::cout << a << ',' << b << '\n';
    for (const auto& [x, y] : rows) {
        std::cout << winkit::format_double(x) << ',' << winkit::format_double(y) << '\n';
    }
}

void print_pairs_json(const char* a, const char* b,
                      const std::vector<std::pair<double, double>>& rows) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [x, y] : rows) {
        nlohmann::ordered_json item;
        item[a] = x;
        item[b] = y;
        list.push_back(std::move(item));
    }
    std::cout << list.dump(2) << '\n';
}

int cmd_gen(const WindowFlags& flags, const std::string& format) {
    const winkit::Window window = winkit::generate(to_spec(flags, flags.window));
    if (format == "json") {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < window.size(); ++n) {
            nlohmann::ordered_json item;
            item["n"] = n;
            item["w"] = window.coefficients[n];
            list.push_back(std::move(item));
        }
        std::cout << list.dump(2) << '\n';
    } else {
        std::cout << "n,w\n";
        for (std::size_t n = 0; n < window.size(); ++n) {
            std::cout << n << ',' << winkit::format_double(window.coefficients[n]) << '\n';
        }
    }
    return kExitOk;
}

int cmd_spectrum(const WindowFlags& flags, int n_fft, const std::string& format) {
    const winkit::Window window = winkit::generate(to_spec(flags, flags.window));
    const winkit::MagnitudeSpectrum spectrum = winkit::magnitude_spectrum(window, n_fft);
    std::vector<std::pair<double, double>> rows;
    rows.reserve(spectrum.db.size());
    for (std::size_t k = 0; k < spectrum.db.size(); ++k) {
        rows.emplace_back(spectrum.grid.omega_over_pi(static_cast<int>(k)), spectrum.db[k]);
    }
    if (format == "json") {
        print_pairs_json("omega_over_pi", "db", rows);
    } else {
        print_pairs_csv("omega_over_pi", "db", rows);
    }
    return kExitOk;
}

int cmd_compare(const WindowFlags& flags, const std::string& names, int n_fft,
                const std::string& format) {
    std::vector<winkit::WindowSpec> specs;
    std::stringstream splitter(names);
    std::string name;
    while (std::getline(splitter, name, ',')) {
        if (!name.empty()) specs.push_back(to_spec(flags, name));
    }
    if (specs.size() < 2) {
        throw winkit::InvalidSpec("--windows needs at least two comma-separated names");
    }
    const auto rows = winkit::run_compare(specs, n_fft);
    if (format == "json") {
        winkit::write_rows_json(std::cout, rows);
    } else {
        winkit::write_rows_csv(std::cout, rows);
    }
    return kExitOk;
}

int cmd_fir(const WindowFlags& flags, double cutoff_over_pi, int n_fft,
            const std::string& format) {
    if (!(cutoff_over_pi > 0.0) || !(cutoff_over_pi < 1.0)) {
        throw winkit::InvalidCutoff("--cutoff must lie in (0, 1) (units of pi)");
    }
    const winkit::Window window = winkit::generate(to_spec(flags, flags.window));
    const winkit::FirFilter filter = winkit::design_fir(window, cutoff_over_pi * M_PI);
    const winkit::FilterMetrics metrics = winkit::filter_metrics(filter, n_fft);

    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["taps"] = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < filter.taps.size(); ++n) {
            nlohmann::ordered_json item;
            item["n"] = n;
            item["h"] = filter.taps[n];
            doc["taps"].push_back(std::move(item));
        }
        doc["metrics"]["stopband_peak_db"] = metrics.stopband_peak_db;
        doc["metrics"]["transition_start"] = metrics.transition_start;
        doc["metrics"]["passband_ref_db"] = metrics.passband_ref_db;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "n,h\n";
        for (std::size_t n = 0; n < filter.taps.size(); ++n) {
            std::cout << n << ',' << winkit::format_double(filter.taps[n]) << '\n';
        }
        std::cout << "\nmetric,value\n";
        std::cout << "stopband_peak_db," << winkit::format_double(metrics.stopband_peak_db) << '\n';
        std::cout << "transition_start," << winkit::format_double(metrics.transition_start) << '\n';
        std::cout << "passband_ref_db," << winkit::format_double(metrics.passband_ref_db) << '\n';
    }
    return kExitOk;
}

int cmd_repro(const winkit::ReproOptions& options, const std::string& format) {
    const winkit::ReproResult result = winkit::run_repro(options);
    if (format == "json") {
        winkit::write_rows_json(std::cout, result.rows);
    } else {
        winkit::write_rows_csv(std::cout, result.rows);
    }
    int within = 0;
    for (const auto& row : result.rows) {
        const double tol = winkit::repro_tolerance(options.table, row.metric_name);
        if (row.delta && std::fabs(*row.delta) <= tol) ++within;
    }
    std::cerr << "table " << options.table << ": " << within << '/' << result.rows.size()
              << " cells within tolerance\n";
    return result.all_within_tolerance ? kExitOk : kExitToleranceFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"window-function and windowed-FIR design toolkit"};
    app.require_subcommand(1);

    std::string format = "csv";
    const auto add_format_flag = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };

    WindowFlags flags;
    int spectrum_nfft = 512;
    int compare_nfft = 512;
    int fir_nfft = 2048;
    double cutoff = 0.0;
    std::string window_list;
    winkit::ReproOptions repro;

    CLI::App* gen = app.add_subcommand("gen", "emit window coefficients as n,w");
    add_window_flags(gen, flags);
    add_format_flag(gen);

    CLI::App* spectrum = app.add_subcommand("spectrum", "emit the magnitude spectrum as omega_over_pi,db");
    add_window_flags(spectrum, flags);
    spectrum->add_option("--nfft", spectrum_nfft, "spectrum grid size (power of two)")
        ->capture_default_str();
    add_format_flag(spectrum);

    CLI::App* compare = app.add_subcommand("compare", "tabulate lobe metrics for several windows");
    compare->add_option("--windows", window_list, "comma-separated window names")->required();
    compare->add_option("-M", flags.order, "window order M")->required();
    add_parameter_flags(compare, flags);
    compare->add_option("--nfft", compare_nfft, "spectrum grid size (power of two)")
        ->capture_default_str();
    add_format_flag(compare);

    CLI::App* fir = app.add_subcommand("fir", "design a windowed low-pass FIR filter");
    add_window_flags(fir, flags);
    fir->add_option("--cutoff", cutoff, "cutoff frequency in units of pi, in (0, 1)")->required();
    fir->add_option("--nfft", fir_nfft, "analysis grid size (power of two)")
        ->capture_default_str();
    add_format_flag(fir);

    CLI::App* repro_cmd = app.add_subcommand("repro", "regress measured metrics against the reference tables");
    repro_cmd->add_option("--table", repro.table, "reference table (1 or 2)")->required();
    repro_cmd->add_option("--nfft", repro.n_fft, "grid size override (power of two)");
    repro_cmd->add_flag("--extended", repro.extended, "include the length-47 companion rows");
    repro_cmd->add_option("--beta", repro.beta, "Kaiser row parameter")->capture_default_str();
    repro_cmd->add_option("--sigma", repro.sigma, "Gaussian row parameter")->capture_default_str();
    repro_cmd->add_option("--atten", repro.atten, "Dolph-Chebyshev row design sidelobe (dB)")->capture_default_str();
    add_format_flag(repro_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(flags, format);
        if (spectrum->parsed()) return cmd_spectrum(flags, spectrum_nfft, format);
        if (compare->parsed()) return cmd_compare(flags, window_list, compare_nfft, format);
        if (fir->parsed()) return cmd_fir(flags, cutoff, fir_nfft, format);
        if (repro_cmd->parsed()) return cmd_repro(repro, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
