#pragma once

// Special functions needed by the closed-form focusing curves:
// complete elliptic integrals (parameter convention), Struve H of
// orders -1, 0, 1, the sine integral and the normalized-at-zero sinc.
//
// All functions are pure and reentrant. Domain violations throw
// cylfocus::DomainError.

namespace cylfocus::specfun {

/// Complete elliptic integral of the first kind,
/// K(m) = int_0^{pi/2} dt / sqrt(1 - m sin^2 t), for m < 1.
/// Negative parameters are mapped through K(m) = K(m/(m-1)) / sqrt(1-m).
double ellip_k(double m);

/// Complete elliptic integral of the second kind,
/// E(m) = int_0^{pi/2} sqrt(1 - m sin^2 t) dt, for m <= 1.
double ellip_e(double m);

/// Struve function H_order(x) for order in {-1, 0, 1} and x >= 0.
double struve_h(int order, double x);

/// Si(x) = int_0^x sin(t)/t dt for x >= 0.
double sine_integral(double x);

/// sin(x)/x with sinc(0) == 1 exactly.
double sinc(double x);

}  // namespace cylfocus::specfun
