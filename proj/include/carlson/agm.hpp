#pragma once
#include "carlson/core.hpp"

namespace carlson {

// Complete first- and second-kind values rf(x,y,0) and rg(x,y,0) from one run
// of the arithmetic-geometric mean; quadratically convergent, so much faster
// than duplication when an argument is exactly 0.
struct complete_pair {
    cplx rf0{};
    cplx rg0{};
    int n_iterations = 0;
};

// x, y nonzero and off the cut; x and y must not lie on opposite rays through
// the origin (y/x on the nonpositive real axis), which is where the mean
// iteration loses quadratic convergence.
complete_pair complete_rf_rg(cplx x, cplx y, double r = default_tolerance);

// rd(0,y,z) by combining the two complete integrals.  Exactly equal arguments
// use the closed form (3*pi/4) * y^(-3/2); near-equal arguments go through the
// generic route.
cplx rd_complete(cplx y, cplx z, double r = default_tolerance);

} // namespace carlson
