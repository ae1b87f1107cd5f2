#pragma once
#include "carlson/core.hpp"

namespace carlson {

// Integral of 1/sqrt(q1(t) q2(t)) over [lower, upper] for two real quadratics
// positive on the open interval; the product may have simple zeros at the
// endpoints.  The whole integral reduces to a single first-kind evaluation.

struct quadratic {
    double f = 0, g = 0, h = 0;  // q(t) = f + 2 g t + h t^2
    double operator()(double t) const { return f + 2.0 * g * t + h * t * t; }
};

struct quartic_spec {
    quadratic q1, q2;
    double lower = 0;
    double upper = 0;            // ignored when upper_infinite
    bool upper_infinite = false;
};

// The reduction quantities.  V is real when both quadratics have real zeros
// or both have conjugate complex pairs; it is pure imaginary in the mixed
// case (exactly one complex pair).
struct reduction_intermediates {
    double U = 0;
    double T = 0;
    cplx V{};
    double q1x = 0, q1y = 0, q2x = 0, q2y = 0;  // endpoint values (x: upper)
};

// Validates the spec (positivity on the interval, convergence at an infinite
// limit) and forms U, T, V.  Does not apply the split rule.
reduction_intermediates reduce(const quartic_spec& spec);

// Full evaluation including the automatic split when both quadratics have
// conjugate complex zeros whose quadrilateral diagonals cross inside the
// interval.  The result is real.
double eval_quartic(const quartic_spec& spec, double r = default_tolerance);

} // namespace carlson
