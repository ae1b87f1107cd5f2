#pragma once
#include "carlson/agm.hpp"

namespace carlson {

// Classical forms re-expressed through the symmetric integrals.  Amplitudes
// phi (and beta) are restricted to [0, pi/2]; larger amplitudes would need a
// quasi-periodic extension that is out of scope, so they are rejected.

struct ke_pair {
    cplx K{};
    cplx E{};
};

// Complete integrals of modulus k, via the mean iteration.  k^2 must avoid
// the ray [1, +inf).
ke_pair complete_K_E(cplx k, double r = default_tolerance);

cplx legendre_F(double phi, cplx k, double r = default_tolerance);
cplx legendre_E_inc(double phi, cplx k, double r = default_tolerance);
// Third-kind integral with integrand factor 1/(1 + n sin^2).  c + n = 0 is an
// error; n < -1 with real modulus routes through the principal value.
cplx legendre_Pi(double phi, cplx k, double n, double r = default_tolerance);
cplx legendre_D(double phi, cplx k, double r = default_tolerance);

// |beta| <= pi/2.  Defined as the ratio of a third-kind integral to K.
cplx jacobi_zeta(double beta, cplx k, double r = default_tolerance);

// 0 <= beta < pi/2 and real 0 <= k^2 < 1; the endpoint beta = pi/2 would push
// a fourth argument to 0 and is rejected.
cplx heuman_lambda(double beta, double k, double r = default_tolerance);

// Bulirsch's forms, literal right-hand sides.
cplx el1(double x, cplx kc, double r = default_tolerance);
cplx el2(double x, cplx kc, cplx a, cplx b, double r = default_tolerance);
cplx el3(double x, cplx kc, cplx p, double r = default_tolerance);
cplx cel(cplx kc, cplx p, cplx a, cplx b, double r = default_tolerance);

// Inverse circular/hyperbolic functions of x/y through the degenerate
// integral; y > 0 for the real forms, complex arguments pass straight to rc.
enum class inverse_kind { log_ratio, arctan, arctanh, arcsin, arcsinh, arccos, arccosh };
cplx inverse_via_rc(inverse_kind kind, cplx x, cplx y, double r = default_tolerance);

} // namespace carlson
