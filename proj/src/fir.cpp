#include "winkit/fir.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "winkit/errors.hpp"
#include "winkit/spectrum.hpp"

namespace winkit {

std::vector<double> ideal_lowpass(int order, double cutoff) {
    if (order < 1) throw InvalidSpec("filter order must be >= 1");
    if (!(cutoff > 0.0) || !(cutoff < M_PI)) {
        throw InvalidCutoff("cutoff must lie in (0, pi) radians");
    }
    const double center = order / 2.0;
    std::vector<double> h(order + 1);
    for (int n = 0; n <= order; ++n) {
        const double x = n - center;
        h[n] = (x == 0.0) ? cutoff / M_PI : std::sin(cutoff * x) / (M_PI * x);
    }
    return h;
}

FirFilter design_fir(const Window& window, double cutoff) {
    std::vector<double> taps = ideal_lowpass(window.order(), cutoff);
    for (std::size_t n = 0; n < taps.size(); ++n) {
        taps[n] *= window.coefficients[n];
    }
    return FirFilter{std::move(taps), cutoff, window.spec};
}

FilterMetrics filter_metrics(const FirFilter& filter, int n_fft) {
    if (!detail::is_power_of_two(n_fft)) {
        throw std::invalid_argument("n_fft must be a power of two, got " + std::to_string(n_fft));
    }
    if (n_fft < 4 * static_cast<int>(filter.taps.size())) {
        throw GridTooCoarse("n_fft=" + std::to_string(n_fft) + " is below 4*(M+1)=" +
                            std::to_string(4 * filter.taps.size()));
    }

    std::vector<double> re(n_fft, 0.0), im(n_fft, 0.0);
    std::copy(filter.taps.begin(), filter.taps.end(), re.begin());
    detail::fft_radix2(re, im);

    const int half = n_fft / 2 + 1;
    const double dc = std::hypot(re[0], im[0]);
    std::vector<double> db(half);
    for (int k = 0; k < half; ++k) {
        const double mag = std::hypot(re[k], im[k]);
        db[k] = (mag > 0.0) ? 20.0 * std::log10(mag / dc) : -400.0;
        db[k] = std::max(db[k], -400.0);
    }

    // stopband opens at the first strict local minimum past the cutoff
    const double cutoff_over_pi = filter.cutoff / M_PI;
    int begin = 0;
    while (begin < half && SpectrumGrid{n_fft}.omega_over_pi(begin) <= cutoff_over_pi) ++begin;

    int null_index = -1;
    for (int k = std::max(begin, 1); k < half - 1; ++k) {
        if (db[k] < db[k - 1] && db[k] < db[k + 1]) {
            null_index = k;
            break;
        }
    }
    if (null_index < 0) {
        throw NoStopband("no strict local minimum beyond the cutoff");
    }

    FilterMetrics metrics;
    metrics.transition_start = SpectrumGrid{n_fft}.omega_over_pi(null_index);
    metrics.stopband_peak_db = *std::max_element(db.begin() + null_index, db.end());
    metrics.passband_ref_db = 0.0;
    return metrics;
}

}  // namespace winkit
