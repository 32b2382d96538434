#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numeric>
#include <vector>

#include "winkit/errors.hpp"
#include "winkit/fir.hpp"
#include "winkit/window.hpp"

using namespace winkit;

namespace {

const double kCutoff = 0.2 * M_PI;

std::vector<WindowSpec> reference_filter_specs(int m) {
    WindowSpec kaiser_spec{WindowKind::Kaiser, m};
    kaiser_spec.beta = 6.0;
    WindowSpec gauss_spec{WindowKind::Gaussian, m};
    gauss_spec.sigma = 0.373;
    WindowSpec dolph_spec{WindowKind::DolphChebyshev, m};
    dolph_spec.sidelobe_db = -48.0;
    return {WindowSpec{WindowKind::Hamming, m}, kaiser_spec, gauss_spec, dolph_spec,
            WindowSpec{WindowKind::Ref9, m}, WindowSpec{WindowKind::Ref15, m},
            WindowSpec{WindowKind::Proposed, m}};
}

}  // namespace

TEST_CASE("ideal_lowpass values at M = 50, cutoff 0.2 pi") {
    const std::vector<double> h = ideal_lowpass(50, kCutoff);
    REQUIRE(h.size() == 51);
    CHECK(h[25] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(std::fabs(h[30]) <= 1e-12);  // sin(pi) at five samples past center
    for (int n = 0; n <= 50; ++n) {
        CHECK(std::fabs(h[n] - h[50 - n]) <= 1e-12);
    }
}

TEST_CASE("ideal_lowpass handles odd orders without a center singularity") {
    const std::vector<double> h = ideal_lowpass(51, kCutoff);
    for (double v : h) CHECK(std::isfinite(v));
    for (int n = 0; n <= 51; ++n) CHECK(std::fabs(h[n] - h[51 - n]) <= 1e-12);
}

TEST_CASE("ideal_lowpass rejects cutoffs outside (0, pi)") {
    CHECK_THROWS_AS(ideal_lowpass(50, 0.0), InvalidCutoff);
    CHECK_THROWS_AS(ideal_lowpass(50, M_PI), InvalidCutoff);
    CHECK_THROWS_AS(ideal_lowpass(50, -0.1), InvalidCutoff);
    CHECK_THROWS_AS(ideal_lowpass(50, 4.0), InvalidCutoff);
}

TEST_CASE("rectangular windowing leaves the ideal response untouched") {
    const FirFilter filter = design_fir(rectangular(50), kCutoff);
    const std::vector<double> ideal = ideal_lowpass(50, kCutoff);
    CHECK(std::memcmp(filter.taps.data(), ideal.data(), ideal.size() * sizeof(double)) == 0);
}

TEST_CASE("designed taps are symmetric and have positive DC gain") {
    for (int m : {50, 70, 100, 200}) {
        for (const WindowSpec& spec : reference_filter_specs(m)) {
            const FirFilter filter = design_fir(generate(spec), kCutoff);
            CAPTURE(to_string(spec.kind));
            CAPTURE(m);
            for (int n = 0; n <= m; ++n) {
                CHECK(std::fabs(filter.taps[n] - filter.taps[m - n]) <= 1e-12);
            }
            const double dc = std::accumulate(filter.taps.begin(), filter.taps.end(), 0.0);
            CHECK(dc > 0.0);
        }
    }
}

TEST_CASE("stopband measurements at M = 50 (regression, n_fft = 2048)") {
    struct Case {
        WindowSpec spec;
        double stopband_db;
        double transition_start;
    };
    const auto specs = reference_filter_specs(50);
    const Case cases[] = {
        {specs[0], -52.089959, 276.0 / 1024.0},  // hamming
        {specs[1], -61.854539, 286.0 / 1024.0},  // kaiser beta=6
        {specs[2], -66.699163, 326.0 / 1024.0},  // gaussian sigma=0.373
        {specs[3], -59.581631, 281.0 / 1024.0},  // dolph-chebyshev -48 dB
        {specs[4], -61.162139, 281.0 / 1024.0},  // ref9
        {specs[5], -59.304920, 279.0 / 1024.0},  // ref15
        {specs[6], -63.338273, 296.0 / 1024.0},  // proposed
    };
    for (const Case& c : cases) {
        CAPTURE(to_string(c.spec.kind));
        const FilterMetrics m = filter_metrics(design_fir(generate(c.spec), kCutoff), 2048);
        CHECK(m.stopband_peak_db == doctest::Approx(c.stopband_db).epsilon(1e-6));
        CHECK(m.transition_start == c.transition_start);
        CHECK(m.stopband_peak_db < 0.0);
        CHECK(m.passband_ref_db == 0.0);
    }
}

TEST_CASE("published stopband attenuations hold where the reference row is consistent") {
    const auto specs50 = reference_filter_specs(50);
    CHECK(std::fabs(filter_metrics(design_fir(generate(specs50[0]), kCutoff), 2048).stopband_peak_db
                    - (-51.37)) <= 1.5);
    CHECK(std::fabs(filter_metrics(design_fir(generate(specs50[2]), kCutoff), 2048).stopband_peak_db
                    - (-66.70)) <= 1.5);
    const auto specs200 = reference_filter_specs(200);
    CHECK(std::fabs(filter_metrics(design_fir(generate(specs200[1]), kCutoff), 2048).stopband_peak_db
                    - (-62.75)) <= 1.5);
}

TEST_CASE("filter metrics are invariant under window scaling") {
    const Window base = hamming(50);
    const FilterMetrics reference = filter_metrics(design_fir(base, kCutoff), 2048);
    for (double c : {4.0, 0.125}) {
        Window w = base;
        for (double& v : w.coefficients) v *= c;
        const FilterMetrics m = filter_metrics(design_fir(w, kCutoff), 2048);
        CHECK(m.stopband_peak_db == reference.stopband_peak_db);
        CHECK(m.transition_start == reference.transition_start);
    }
    for (double c : {3.0, 0.9}) {
        Window w = base;
        for (double& v : w.coefficients) v *= c;
        const FilterMetrics m = filter_metrics(design_fir(w, kCutoff), 2048);
        CHECK(std::fabs(m.stopband_peak_db - reference.stopband_peak_db) <= 1e-12);
        CHECK(m.transition_start == reference.transition_start);
    }
}

TEST_CASE("grid and stopband validation") {
    const FirFilter filter = design_fir(hamming(200), kCutoff);
    CHECK_THROWS_AS(filter_metrics(filter, 512), GridTooCoarse);
    CHECK_THROWS_AS(filter_metrics(filter, 1000), std::invalid_argument);
    // no bins left beyond a cutoff close to pi on a minimal grid
    const FirFilter tight = design_fir(rectangular(2), 0.9 * M_PI);
    CHECK_THROWS_AS(filter_metrics(tight, 16), NoStopband);
}
