#pragma once
#include "carlson/branch.hpp"
#include "carlson/errors.hpp"

namespace carlson {

// Tolerance r bounds |computed/true - 1|.  Each entry point enforces a window:
// r must exceed 50 machine epsilons (roundoff must stay negligible against
// truncation) and must not exceed the cap under which the truncated series'
// error bound was derived.  Out-of-window r is an error, never clamped.
inline constexpr double default_tolerance = 1e-10;
inline constexpr double tol_cap_first_kind = 3e-4;  // rf and the complete forms
inline constexpr double tol_cap_degenerate = 2e-4;  // rc
inline constexpr double tol_cap_third_kind = 1e-4;  // rj, rd, rg
void require_tolerance(double r, double cap);

struct eval_result {
    cplx value{};
    double r = default_tolerance;  // tolerance the call honoured
    int n_iterations = 0;
    bool unchecked = false;        // admissibility checks were overridden
};

// One contraction of an argument set: lambda is built from the current square
// roots, then every tracked quantity moves to (v + lambda)/4.  The third-kind
// extras d, e and the threshold state delta, Q ride along so the callers'
// loops stay thin.
struct duplication_state {
    int m = 0;
    cplx A{};            // running arithmetic mean
    cplx x{}, y{}, z{};
    cplx p{};            // fourth variable, third-kind only
    bool has_p = false;
    cplx lam{};          // lambda consumed by the step that produced this state
    cplx d{}, e{};       // third-kind per-step quantities for that same step
    cplx delta{};        // (p-x)(p-y)(p-z), fixed at the start
    double Q = 0.0;      // termination threshold scale
};

duplication_state duplication_step(const duplication_state& s);

// Symmetric integral of the first kind.  At most one argument may be 0;
// nonzero arguments must lie off the nonpositive real axis.
eval_result rf(cplx x, cplx y, cplx z, double r = default_tolerance);

// Degenerate first-kind integral (equal second and third argument).  y real
// negative selects the Cauchy principal value.  y = 0 is an error.
eval_result rc(cplx x, cplx y, double r = default_tolerance);

// Symmetric integral of the third kind.  Accepted argument classes:
//   (a) Re x, Re y, Re z >= 0 with at most one of x,y,z zero, and Re p > 0;
//   (b) x,y,z real nonnegative (at most one zero), p nonzero off the
//       nonpositive real axis;
//   (c) one conjugate pair among x,y,z (nonreal), the third real nonnegative,
//       p nonzero off the nonpositive real axis;
//   x,y,z real nonnegative with p real negative: Cauchy principal value.
// Anything else is a domain error unless `unchecked` is set, in which case
// the duplication runs anyway and the result carries the unchecked marker.
eval_result rj(cplx x, cplx y, cplx z, cplx p, double r = default_tolerance,
               bool unchecked = false);

// Second-kind degenerate of the third-kind integral (p equal to z).
// z must be nonzero and off the cut; at most one of x, y may be 0.
eval_result rd(cplx x, cplx y, cplx z, double r = default_tolerance);

// Completely symmetric second-kind integral.  Any subset of arguments may be
// 0 (all three is an error); with two zeros the value is sqrt(z)/2.
eval_result rg(cplx x, cplx y, cplx z, double r = default_tolerance);

} // namespace carlson
