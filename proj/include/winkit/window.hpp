#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace winkit {

/// Window families supported by the generator.
enum class WindowKind {
    Proposed,
    Hamming,
    Hanning,
    Bartlett,
    Kaiser,
    Gaussian,
    DolphChebyshev,
    Lanczos,
    Ref9,
    Ref15,
    Rectangular,
};

/// Canonical lowercase name of a window kind (e.g. "dolph-chebyshev").
std::string_view to_string(WindowKind kind);

/// Case-insensitive parse of a window name; nullopt for unknown names.
std::optional<WindowKind> parse_window_kind(std::string_view name);

/// Full specification of a window: family, order M (the window has M+1
/// points), and the family-specific tuning parameters. Parameters that a
/// family does not use are ignored.
struct WindowSpec {
    WindowSpec() = default;
    WindowSpec(WindowKind k, int m) : kind(k), order(m) {}

    WindowKind kind = WindowKind::Rectangular;
    int order = 2;                           ///< M >= 2
    std::optional<double> beta;              ///< Kaiser shape, beta >= 0
    std::optional<double> sigma;             ///< Gaussian width, 0 < sigma <= 0.5
    std::optional<int> power;                ///< Lanczos exponent L >= 1
    std::optional<double> sidelobe_db;       ///< Dolph-Chebyshev design attenuation, < 0

    bool operator==(const WindowSpec&) const = default;
};

/// A generated window: M+1 coefficients, symmetric about M/2.
struct Window {
    WindowSpec spec;
    std::vector<double> coefficients;  ///< indexed n = 0..M

    int order() const { return spec.order; }
    std::size_t size() const { return coefficients.size(); }
};

/// Dispatch over all families. Throws InvalidSpec when a required
/// parameter is missing or out of range.
Window generate(const WindowSpec& spec);

/// cos^5.3 taper on (2n/M - 1) radians. For M >= 20 the two endpoints are
/// replaced by the cubic endpoint polynomial
/// 4.6051e-9*M^3 + 1.8899e-6*M^2 + 0.007339*M + 0.036034.
Window proposed_window(int order);

/// Value of the endpoint polynomial used by proposed_window for M >= 20.
double proposed_endpoint(int order);

Window hamming(int order);    ///< 0.54 - 0.46 cos(2 pi n / M)
Window hanning(int order);    ///< 0.5 - 0.5 cos(2 pi n / M)
Window bartlett(int order);   ///< 1 - |2n/M - 1|
Window rectangular(int order);

/// I0(beta*sqrt(1 - (2n/M - 1)^2)) / I0(beta), endpoints included.
Window kaiser(int order, double beta);

/// exp(-0.5*((n - M/2)/(sigma*M/2))^2), 0 < sigma <= 0.5.
Window gaussian(int order, double sigma);

/// Equiripple window with all side lobes designed at sidelobe_db (< 0).
/// Built from the Chebyshev cosine series with x0 = cosh(acosh(1/r)/M),
/// r = 10^(sidelobe_db/20), rescaled so the peak coefficient is 1.
Window dolph_chebyshev(int order, double sidelobe_db);

/// sinc^L(2n/M - 1); endpoints are exact zeros of the normalized sinc.
Window lanczos(int order, int power);

/// sinc^2.5((n - M/2)/(0.654 M)) in the interior; the endpoints take
/// 0.02 + 0.001 M + 1/(2M + 50).
Window window_ref9(int order);

/// 0.536 - 0.461 cos(2 pi n / M) - 0.003 cos(6 pi n / M)
Window window_ref15(int order);

}  // namespace winkit
