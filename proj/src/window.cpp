#include "winkit/window.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "winkit/errors.hpp"
#include "winkit/special_functions.hpp"

namespace winkit {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void require_order(int order) {
    if (order < 2) throw InvalidSpec("window order M must be >= 2, got " + std::to_string(order));
}

Window make_window(WindowSpec spec, std::vector<double> coeffs) {
    return Window{std::move(spec), std::move(coeffs)};
}

}  // namespace

std::string_view to_string(WindowKind kind) {
    switch (kind) {
        case WindowKind::Proposed: return "proposed";
        case WindowKind::Hamming: return "hamming";
        case WindowKind::Hanning: return "hanning";
        case WindowKind::Bartlett: return "bartlett";
        case WindowKind::Kaiser: return "kaiser";
        case WindowKind::Gaussian: return "gaussian";
        case WindowKind::DolphChebyshev: return "dolph-chebyshev";
        case WindowKind::Lanczos: return "lanczos";
        case WindowKind::Ref9: return "ref9";
        case WindowKind::Ref15: return "ref15";
        case WindowKind::Rectangular: return "rectangular";
    }
    return "unknown";
}

std::optional<WindowKind> parse_window_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    static constexpr WindowKind kAll[] = {
        WindowKind::Proposed,  WindowKind::Hamming,        WindowKind::Hanning,
        WindowKind::Bartlett,  WindowKind::Kaiser,         WindowKind::Gaussian,
        WindowKind::DolphChebyshev, WindowKind::Lanczos,   WindowKind::Ref9,
        WindowKind::Ref15,     WindowKind::Rectangular,
    };
    for (WindowKind k : kAll) {
        if (lower == to_string(k)) return k;
    }
    if (lower == "dolphchebyshev") return WindowKind::DolphChebyshev;
    return std::nullopt;
}

double proposed_endpoint(int order) {
    const double m = static_cast<double>(order);
    return 4.6051e-9 * m * m * m + 1.8899e-6 * m * m + 0.007339 * m + 0.036034;
}

Window proposed_window(int order) {
    require_order(order);
    const double m = static_cast<double>(order);
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        w[n] = std::pow(std::cos(2.0 * n / m - 1.0), 5.3);
    }
    if (order >= 20) {
        w[0] = w[order] = proposed_endpoint(order);
    }
    return make_window({WindowKind::Proposed, order}, std::move(w));
}

Window hamming(int order) {
    require_order(order);
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        w[n] = 0.54 - 0.46 * std::cos(kTwoPi * n / order);
    }
    return make_window({WindowKind::Hamming, order}, std::move(w));
}

Window hanning(int order) {
    require_order(order);
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        w[n] = 0.5 - 0.5 * std::cos(kTwoPi * n / order);
    }
    return make_window({WindowKind::Hanning, order}, std::move(w));
}

Window bartlett(int order) {
    require_order(order);
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        w[n] = 1.0 - std::fabs(2.0 * n / order - 1.0);
    }
    return make_window({WindowKind::Bartlett, order}, std::move(w));
}

Window rectangular(int order) {
    require_order(order);
    return make_window({WindowKind::Rectangular, order},
                       std::vector<double>(order + 1, 1.0));
}

Window kaiser(int order, double beta) {
    require_order(order);
    if (beta < 0.0) throw InvalidSpec("kaiser beta must be >= 0");
    const double denom = bessel_i0(beta);
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        const double u = 2.0 * n / order - 1.0;
        const double arg = beta * std::sqrt(std::max(0.0, 1.0 - u * u));
        w[n] = bessel_i0(arg) / denom;
    }
    WindowSpec spec{WindowKind::Kaiser, order};
    spec.beta = beta;
    return make_window(std::move(spec), std::move(w));
}

Window gaussian(int order, double sigma) {
    require_order(order);
    if (!(sigma > 0.0) || sigma > 0.5) {
        throw InvalidSpec("gaussian sigma must be in (0, 0.5]");
    }
    const double center = order / 2.0;
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        const double u = (n - center) / (sigma * center);
        w[n] = std::exp(-0.5 * u * u);
    }
    WindowSpec spec{WindowKind::Gaussian, order};
    spec.sigma = sigma;
    return make_window(std::move(spec), std::move(w));
}

Window dolph_chebyshev(int order, double sidelobe_db) {
    require_order(order);
    if (!(sidelobe_db < 0.0)) {
        throw InvalidSpec("dolph-chebyshev design sidelobe must be negative dB");
    }
    const int points = order + 1;
    const double ripple = std::pow(10.0, sidelobe_db / 20.0);
    const double x0 = std::cosh(std::acosh(1.0 / ripple) / order);

    // Cosine series over the Chebyshev frequency samples; the index is
    // centered on M/2 so the peak lands at the window center. Frequency
    // samples pair up symmetrically, hence the factor 2 on i = 1..M/2
    // (for odd M the dropped middle sample is an exact zero of T_M).
    const int half = order / 2;
    std::vector<double> sample(half + 1);
    for (int i = 1; i <= half; ++i) {
        sample[i] = chebyshev_t(order, x0 * std::cos(M_PI * i / points));
    }
    const double t0 = chebyshev_t(order, x0);

    std::vector<double> w(points);
    for (int n = 0; n < points; ++n) {
        double acc = t0;
        const double shifted = n - order / 2.0;
        for (int i = 1; i <= half; ++i) {
            acc += 2.0 * sample[i] * std::cos(kTwoPi * i * shifted / points);
        }
        w[n] = acc;
    }
    const double peak = *std::max_element(w.begin(), w.end());
    for (double& v : w) v /= peak;

    WindowSpec spec{WindowKind::DolphChebyshev, order};
    spec.sidelobe_db = sidelobe_db;
    return make_window(std::move(spec), std::move(w));
}

Window lanczos(int order, int power) {
    require_order(order);
    if (power < 1) throw InvalidSpec("lanczos L must be >= 1");
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        w[n] = std::pow(sinc_normalized(2.0 * n / order - 1.0), power);
    }
    WindowSpec spec{WindowKind::Lanczos, order};
    spec.power = power;
    return make_window(std::move(spec), std::move(w));
}

Window window_ref9(int order) {
    require_order(order);
    const double m = static_cast<double>(order);
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        w[n] = std::pow(sinc_normalized((n - m / 2.0) / (0.654 * m)), 2.5);
    }
    w[0] = w[order] = 0.02 + 0.001 * m + 1.0 / (2.0 * m + 50.0);
    return make_window({WindowKind::Ref9, order}, std::move(w));
}

Window window_ref15(int order) {
    require_order(order);
    std::vector<double> w(order + 1);
    for (int n = 0; n <= order; ++n) {
        w[n] = 0.536 - 0.461 * std::cos(kTwoPi * n / order)
             - 0.003 * std::cos(3.0 * kTwoPi * n / order);
    }
    return make_window({WindowKind::Ref15, order}, std::move(w));
}

Window generate(const WindowSpec& spec) {
    switch (spec.kind) {
        case WindowKind::Proposed: return proposed_window(spec.order);
        case WindowKind::Hamming: return hamming(spec.order);
        case WindowKind::Hanning: return hanning(spec.order);
        case WindowKind::Bartlett: return bartlett(spec.order);
        case WindowKind::Rectangular: return rectangular(spec.order);
        case WindowKind::Kaiser:
            if (!spec.beta) throw InvalidSpec("kaiser window requires --beta");
            return kaiser(spec.order, *spec.beta);
        case WindowKind::Gaussian:
            if (!spec.sigma) throw InvalidSpec("gaussian window requires --sigma");
            return gaussian(spec.order, *spec.sigma);
        case WindowKind::DolphChebyshev:
            if (!spec.sidelobe_db) throw InvalidSpec("dolph-chebyshev window requires --atten");
            return dolph_chebyshev(spec.order, *spec.sidelobe_db);
        case WindowKind::Lanczos:
            if (!spec.power) throw InvalidSpec("lanczos window requires --L");
            return lanczos(spec.order, *spec.power);
        case WindowKind::Ref9: return window_ref9(spec.order);
        case WindowKind::Ref15: return window_ref15(spec.order);
    }
    throw InvalidSpec("unknown window kind");
}

}  // namespace winkit
