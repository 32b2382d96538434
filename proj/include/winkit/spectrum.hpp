#pragma once

#include <span>
#include <vector>

#include "winkit/window.hpp"

namespace winkit {

/// Uniform frequency grid: n_fft samples of omega over [0, 2*pi), of which
/// the half-spectrum k = 0..n_fft/2 is retained.
struct SpectrumGrid {
    int n_fft = 512;

    int half_size() const { return n_fft / 2 + 1; }
    double omega_over_pi(int k) const { return 2.0 * k / n_fft; }
};

/// Peak-normalized magnitude spectrum in dB over the half grid.
/// db[k] = 20*log10(|W(omega_k)| / max_j |W(omega_j)|), floored at -400 dB.
struct MagnitudeSpectrum {
    SpectrumGrid grid;
    std::vector<double> db;  ///< size grid.half_size(); max entry is exactly 0
};

/// Figures of merit extracted from a magnitude spectrum. Frequencies are
/// in units of pi.
struct LobeMetrics {
    double halfwidth_3db = 0.0;        ///< first grid frequency with db <= -3
    double fullwidth_3db = 0.0;        ///< 2 * halfwidth_3db
    double first_null = 0.0;           ///< first strict local minimum after the peak
    double sidelobe_peak_db = 0.0;     ///< max db at or beyond the first null
    double equiripple_spread_db = 0.0; ///< max - min over side-lobe local maxima
};

/// Zero-padded sampled spectrum of a coefficient sequence.
/// Throws GridTooCoarse when n_fft < 4 * length, std::invalid_argument when
/// n_fft is not a power of two.
MagnitudeSpectrum magnitude_spectrum(std::span<const double> coefficients, int n_fft);
MagnitudeSpectrum magnitude_spectrum(const Window& window, int n_fft);

/// |sum_n w[n] e^{-i omega n}| by direct summation. Oracle for the sampled
/// evaluation; kept independent of the FFT path.
double dtft_direct(std::span<const double> coefficients, double omega);
double dtft_direct(const Window& window, double omega);

/// Extracts the -3 dB width, first null, and side-lobe figures.
/// Throws NoSidelobe when the spectrum has no strict local minimum in (0, pi).
LobeMetrics lobe_metrics(const MagnitudeSpectrum& spectrum);

namespace detail {
/// In-place radix-2 FFT over interleaved complex data (re, im pairs).
void fft_radix2(std::vector<double>& re, std::vector<double>& im);
bool is_power_of_two(int n);
}  // namespace detail

}  // namespace winkit
