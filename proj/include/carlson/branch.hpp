#pragma once
#include <complex>

namespace carlson {

using cplx = std::complex<double>;

// Turn -0.0 components into +0.0 so a signed zero cannot silently select the
// lower branch of a cut.
cplx normalize_zero(cplx z);

// Square root with nonnegative real part.  On the negative real axis, where
// both roots are pure imaginary, the tie breaks upward: sqrt(-4) = +2i.
// Exactly real nonnegative input yields an exactly real result.
cplx principal_sqrt(cplx z);

// True iff z is neither 0 nor a nonpositive real, i.e. z avoids the cut.
bool in_cut_plane(cplx z);

// Principal argument in (-pi, pi].  Throws domain_error for z = 0.
double phase(cplx z);

} // namespace carlson
