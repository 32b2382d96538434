#pragma once

namespace winkit {

/// Zeroth-order modified Bessel function of the first kind, I0(x).
///
/// Power series sum_{k>=0} ((x/2)^k / k!)^2, truncated once a term drops
/// below 1e-12 of the running sum. Even in x; I0(0) = 1.
double bessel_i0(double x);

/// Chebyshev polynomial of the first kind, T_order(x).
///
/// Uses cos(order*acos(x)) for |x| <= 1 and the cosh/acosh form with the
/// appropriate sign for |x| > 1, which stays stable where the coefficient
/// expansion would overflow (needed up to order 200 at x slightly above 1).
double chebyshev_t(int order, double x);

/// Normalized sinc, sin(pi*x)/(pi*x), with sinc(0) = 1 handled exactly.
double sinc_normalized(double x);

}  // namespace winkit
