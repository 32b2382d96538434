#include "winkit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "winkit/errors.hpp"

namespace winkit {

namespace detail {

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

void fft_radix2(std::vector<double>& re, std::vector<double>& im) {
    const std::size_t n = re.size();
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) {
            std::swap(re[i], re[j]);
            std::swap(im[i], im[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        // per-stage twiddle table keeps rounding error flat across stages
        std::vector<double> wr(len / 2), wi(len / 2);
        for (std::size_t k = 0; k < len / 2; ++k) {
            wr[k] = std::cos(ang * static_cast<double>(k));
            wi[k] = std::sin(ang * static_cast<double>(k));
        }
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::size_t a = i + k;
                const std::size_t b = a + len / 2;
                const double tr = re[b] * wr[k] - im[b] * wi[k];
                const double ti = re[b] * wi[k] + im[b] * wr[k];
                re[b] = re[a] - tr;
                im[b] = im[a] - ti;
                re[a] += tr;
                im[a] += ti;
            }
        }
    }
}

}  // namespace detail

MagnitudeSpectrum magnitude_spectrum(std::span<const double> coefficients, int n_fft) {
    if (!detail::is_power_of_two(n_fft)) {
        throw std::invalid_argument("n_fft must be a power of two, got " + std::to_string(n_fft));
    }
    if (n_fft < 4 * static_cast<int>(coefficients.size())) {
        throw GridTooCoarse("n_fft=" + std::to_string(n_fft) + " is below 4*(M+1)=" +
                            std::to_string(4 * coefficients.size()));
    }

    std::vector<double> re(n_fft, 0.0), im(n_fft, 0.0);
    std::copy(coefficients.begin(), coefficients.end(), re.begin());
    detail::fft_radix2(re, im);

    const int half = n_fft / 2 + 1;
    std::vector<double> mag(half);
    double peak = 0.0;
    for (int k = 0; k < half; ++k) {
        mag[k] = std::hypot(re[k], im[k]);
        peak = std::max(peak, mag[k]);
    }

    MagnitudeSpectrum spectrum{SpectrumGrid{n_fft}, std::vector<double>(half)};
    for (int k = 0; k < half; ++k) {
        const double db = (mag[k] > 0.0) ? 20.0 * std::log10(mag[k] / peak) : -400.0;
        spectrum.db[k] = std::max(db, -400.0);
    }
    return spectrum;
}

MagnitudeSpectrum magnitude_spectrum(const Window& window, int n_fft) {
    return magnitude_spectrum(std::span<const double>(window.coefficients), n_fft);
}

double dtft_direct(std::span<const double> coefficients, double omega) {
    double re = 0.0, im = 0.0;
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
        re += coefficients[n] * std::cos(omega * static_cast<double>(n));
        im -= coefficients[n] * std::sin(omega * static_cast<double>(n));
    }
    return std::hypot(re, im);
}

double dtft_direct(const Window& window, double omega) {
    return dtft_direct(std::span<const double>(window.coefficients), omega);
}

LobeMetrics lobe_metrics(const MagnitudeSpectrum& spectrum) {
    const auto& db = spectrum.db;
    const int last = static_cast<int>(db.size()) - 1;

    int null_index = -1;
    for (int k = 1; k < last; ++k) {
        if (db[k] < db[k - 1] && db[k] < db[k + 1]) {
            null_index = k;
            break;
        }
    }
    if (null_index < 0) {
        throw NoSidelobe("spectrum has no strict local minimum before pi");
    }

    int crossing = -1;
    for (int k = 0; k <= last; ++k) {
        if (db[k] <= -3.0) {
            crossing = k;
            break;
        }
    }
    if (crossing < 0) {
        throw NoSidelobe("spectrum never falls to -3 dB");
    }

    LobeMetrics metrics;
    metrics.halfwidth_3db = spectrum.grid.omega_over_pi(crossing);
    metrics.fullwidth_3db = 2.0 * metrics.halfwidth_3db;
    metrics.first_null = spectrum.grid.omega_over_pi(null_index);
    metrics.sidelobe_peak_db = *std::max_element(db.begin() + null_index, db.end());

    double lobe_max = -400.0, lobe_min = 0.0;
    bool any_lobe = false;
    for (int k = null_index + 1; k < last; ++k) {
        if (db[k] > db[k - 1] && db[k] > db[k + 1]) {
            if (!any_lobe) {
                lobe_max = lobe_min = db[k];
                any_lobe = true;
            } else {
                lobe_max = std::max(lobe_max, db[k]);
                lobe_min = std::min(lobe_min, db[k]);
            }
        }
    }
    metrics.equiripple_spread_db = any_lobe ? lobe_max - lobe_min : 0.0;
    return metrics;
}

}  // namespace winkit
