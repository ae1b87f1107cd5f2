#pragma once
#include <functional>
#include "carlson/core.hpp"

namespace carlson {

// Independent check values by adaptive quadrature of the defining integrals,
// deliberately sharing no machinery with the duplication engine.

enum class integral_kind { rf, rc, rj, rd, rg };

struct oracle_spec {
    integral_kind kind = integral_kind::rf;
    cplx x{}, y{}, z{}, p{};
    bool principal_value = false;  // pole on the positive t-axis
    double target = 1e-9;          // cannot be tightened below 1e-9
};

// Adaptive 15-point quadrature with embedded 7-point error estimate, for a
// complex-valued integrand over a finite interval.  `tol` is absolute.
cplx integrate(const std::function<cplx(double)>& f, double a, double b, double tol);

// Quadrature of the defining half-line integral.  Square-root substitutions
// flatten the endpoint behaviour at 0 and infinity; a real negative second/
// fourth argument is handled by symmetric excision around the pole with a
// Richardson limit on the excision radius.
cplx oracle_eval(const oracle_spec& spec);

} // namespace carlson
