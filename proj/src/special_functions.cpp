#include "winkit/special_functions.hpp"

#include <cmath>
#include <cstdlib>

namespace winkit {

double bessel_i0(double x) {
    x = std::fabs(x);
    const double half = x / 2.0;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; ; ++k) {
        const double ratio = half / k;
        term *= ratio * ratio;
        sum += term;
        if (term < 1e-12 * sum) break;
    }
    return sum;
}

double chebyshev_t(int order, double x) {
    if (order == 0) return 1.0;
    if (std::fabs(x) <= 1.0) {
        return std::cos(order * std::acos(x));
    }
    const double magnitude = std::cosh(order * std::acosh(std::fabs(x)));
    // T_n(-x) = (-1)^n T_n(x)
    if (x < 0.0 && (order % 2 != 0)) return -magnitude;
    return magnitude;
}

double sinc_normalized(double x) {
    if (x == 0.0) return 1.0;
    const double px = M_PI * x;
    return std::sin(px) / px;
}

}  // namespace winkit
