#pragma once

#include <vector>

#include "winkit/window.hpp"

namespace winkit {

/// Windowed low-pass FIR filter: M+1 symmetric taps.
struct FirFilter {
    std::vector<double> taps;
    double cutoff = 0.0;  ///< omega_c in radians, in (0, pi)
    WindowSpec window_spec;

    int order() const { return static_cast<int>(taps.size()) - 1; }
};

/// Stopband measurements of a low-pass filter, normalized to |H(0)|.
struct FilterMetrics {
    double stopband_peak_db = 0.0;  ///< max dB beyond the transition
    double passband_ref_db = 0.0;   ///< |H| at omega = 0 (0 dB by normalization)
    double transition_start = 0.0;  ///< omega/pi of the first minimum past cutoff
};

/// Shifted ideal low-pass impulse response:
/// h_d[n] = sin(cutoff*(n - M/2)) / (pi*(n - M/2)), with the removable
/// singularity at n = M/2 taking cutoff/pi exactly.
/// Throws InvalidCutoff unless 0 < cutoff < pi.
std::vector<double> ideal_lowpass(int order, double cutoff);

/// Windowed truncation: taps[n] = h_d[n] * w[n].
FirFilter design_fir(const Window& window, double cutoff);

/// Measures the stopband peak beyond the first strict local minimum of
/// |H| past the cutoff. Throws GridTooCoarse / NoStopband.
FilterMetrics filter_metrics(const FirFilter& filter, int n_fft);

}  // namespace winkit
