// End-to-end checks of the command-line tool: exit codes, output formats,
// byte determinism, and the CSV round-trip guarantee. The binary path comes
// from the WINDOWKIT_BIN environment variable set by CTest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "winkit/fir.hpp"
#include "winkit/spectrum.hpp"
#include "winkit/window.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

std::string binary_path() {
    const char* path = std::getenv("WINDOWKIT_BIN");
    REQUIRE_MESSAGE(path != nullptr, "WINDOWKIT_BIN must point at the CLI binary");
    return path;
}

CommandResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string command =
        "'" + binary_path() + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

// CSV field (0-based column) of data row `index` (0-based, after the header)
std::string csv_field(const std::string& text, std::size_t index, std::size_t column) {
    const auto lines = lines_of(text);
    REQUIRE(lines.size() > index + 1);
    std::stringstream stream(lines[index + 1]);
    std::string field;
    for (std::size_t c = 0; c <= column; ++c) {
        REQUIRE(std::getline(stream, field, ','));
    }
    return field;
}

// value column of a two-column CSV
double csv_value(const std::string& text, std::size_t index) {
    return std::strtod(csv_field(text, index, 1).c_str(), nullptr);
}

// measured column of a report-row CSV
double report_measured(const std::string& text, std::size_t index) {
    return std::strtod(csv_field(text, index, 4).c_str(), nullptr);
}

}  // namespace

TEST_CASE("gen emits M+1 full-precision rows") {
    const CommandResult result = run_cli("gen --window hamming -M 4");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,w");
    CHECK(csv_value(result.output, 2) == 1.0);

    const CommandResult proposed = run_cli("gen --window proposed -M 14");
    CHECK(proposed.exit_code == 0);
    CHECK(csv_value(proposed.output, 0) == doctest::Approx(0.0382802840138293).epsilon(1e-9));
}

TEST_CASE("gen validates its flags with exit code 2") {
    const CommandResult missing_beta = run_cli("gen --window kaiser -M 10", true);
    CHECK(missing_beta.exit_code == 2);
    CHECK(missing_beta.output.find("--beta") != std::string::npos);

    CHECK(run_cli("gen --window blackman -M 10").exit_code == 2);
    CHECK(run_cli("gen --window hamming").exit_code == 2);
    CHECK(run_cli("gen --window hamming -M 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("spectrum emits the half grid with a 0,0 first row") {
    const CommandResult result = run_cli("spectrum --window hamming -M 50 --nfft 512");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 258);  // header + nfft/2 + 1 rows
    CHECK(lines[0] == "omega_over_pi,db");
    CHECK(lines[1] == "0,0");

    CHECK(run_cli("spectrum --window hamming -M 50 --nfft 100").exit_code == 2);
    CHECK(run_cli("spectrum --window hamming -M 200 --nfft 512").exit_code == 2);
}

TEST_CASE("fir prints taps and a metrics block") {
    const CommandResult result = run_cli("fir --window rectangular -M 50 --cutoff 0.2");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() >= 56);
    CHECK(lines[0] == "n,h");

    // round-trip: the printed taps parse back to the exact ideal response
    const std::vector<double> ideal = winkit::ideal_lowpass(50, 0.2 * M_PI);
    for (int n = 0; n <= 50; ++n) {
        CHECK(csv_value(result.output, n) == ideal[n]);
    }
    CHECK(result.output.find("stopband_peak_db,") != std::string::npos);
    CHECK(result.output.find("transition_start,") != std::string::npos);
}

TEST_CASE("fir rejects out-of-range cutoffs") {
    CHECK(run_cli("fir --window hamming -M 50 --cutoff 1.5").exit_code == 2);
    CHECK(run_cli("fir --window hamming -M 50 --cutoff 0").exit_code == 2);
}

TEST_CASE("compare lists metric rows per window and stays deterministic") {
    const CommandResult result = run_cli("compare --windows proposed,hamming -M 14");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 9);

    // side-lobe rows: proposed is the lower of the pair, close to the
    // published gap of about 13.8 dB
    const double proposed_sidelobe = report_measured(result.output, 2);
    const double hamming_sidelobe = report_measured(result.output, 6);
    CHECK(proposed_sidelobe < hamming_sidelobe);
    CHECK(std::fabs((hamming_sidelobe - proposed_sidelobe) - 13.77) <= 1.0);

    const CommandResult twice = run_cli("compare --windows proposed,proposed -M 14");
    const auto twin = lines_of(twice.output);
    REQUIRE(twin.size() == 9);
    for (int i = 1; i <= 4; ++i) CHECK(twin[i] == twin[i + 4]);

    CHECK(run_cli("compare --windows proposed -M 14").exit_code == 2);
    CHECK(run_cli("compare --windows proposed,unknown -M 14").exit_code == 2);
}

TEST_CASE("compare reproduces the published ref9 side-lobe gap at M = 14") {
    const CommandResult result = run_cli("compare --windows proposed,ref9 -M 14");
    CHECK(result.exit_code == 0);
    const double proposed_sidelobe = report_measured(result.output, 2);
    const double ref9_sidelobe = report_measured(result.output, 6);
    CHECK(std::fabs((ref9_sidelobe - proposed_sidelobe) - 2.7) <= 1.0);
}

TEST_CASE("repro emits the full cell table and a 0/1 exit code") {
    const CommandResult table1 = run_cli("repro --table 1");
    CHECK((table1.exit_code == 0 || table1.exit_code == 1));
    CHECK(lines_of(table1.output).size() == 13);

    const CommandResult table2 = run_cli("repro --table 2");
    CHECK((table2.exit_code == 0 || table2.exit_code == 1));
    CHECK(lines_of(table2.output).size() == 29);

    const CommandResult extended = run_cli("repro --table 1 --extended");
    CHECK(lines_of(extended.output).size() == 15);

    CHECK(run_cli("repro --table 3").exit_code == 2);
    CHECK(run_cli("repro").exit_code == 2);
}

TEST_CASE("json output parses with the documented field names") {
    const CommandResult result = run_cli("repro --table 1 --format json");
    const auto parsed = nlohmann::json::parse(result.output);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 12);
    for (const auto& item : parsed) {
        CHECK(item.contains("window_name"));
        CHECK(item.contains("M"));
        CHECK(item.contains("paper_value"));
        CHECK(item.contains("delta"));
    }

    const CommandResult gen = run_cli("gen --window hamming -M 4 --format json");
    const auto gen_parsed = nlohmann::json::parse(gen.output);
    REQUIRE(gen_parsed.size() == 5);
    CHECK(gen_parsed[2]["w"].get<double>() == 1.0);
}

TEST_CASE("stdout is byte-identical across invocations") {
    for (const char* args : {"gen --window proposed -M 50",
                             "spectrum --window kaiser --beta 6 -M 50",
                             "repro --table 1",
                             "compare --windows proposed,hamming,kaiser --beta 6 -M 50"}) {
        CHECK(run_cli(args).output == run_cli(args).output);
    }
}

TEST_CASE("gen output re-analyzes to bit-identical metrics") {
    const CommandResult result = run_cli("gen --window proposed -M 50");
    REQUIRE(result.exit_code == 0);
    std::vector<double> parsed;
    const auto lines = lines_of(result.output);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        parsed.push_back(std::strtod(lines[i].c_str() + comma + 1, nullptr));
    }
    REQUIRE(parsed.size() == 51);

    const winkit::Window direct = winkit::proposed_window(50);
    const winkit::LobeMetrics from_csv =
        winkit::lobe_metrics(winkit::magnitude_spectrum(parsed, 512));
    const winkit::LobeMetrics from_lib =
        winkit::lobe_metrics(winkit::magnitude_spectrum(direct, 512));
    CHECK(from_csv.sidelobe_peak_db == from_lib.sidelobe_peak_db);
    CHECK(from_csv.halfwidth_3db == from_lib.halfwidth_3db);
    CHECK(from_csv.first_null == from_lib.first_null);
    CHECK(from_csv.equiripple_spread_db == from_lib.equiripple_spread_db);
}
