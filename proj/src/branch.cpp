#include "carlson/branch.hpp"
#include "carlson/errors.hpp"
#include <cmath>

namespace carlson {

cplx normalize_zero(cplx z) {
    // +0.0 forces -0.0 to +0.0 and leaves every other value alone.
    return {z.real() + 0.0, z.imag() + 0.0};
}

cplx principal_sqrt(cplx z) {
    z = normalize_zero(z);
    if (z.imag() == 0.0) {
        // Keep exactly-real pipelines exactly real.
        if (z.real() >= 0.0) return {std::sqrt(z.real()), 0.0};
        return {0.0, std::sqrt(-z.real())};
    }
    return std::sqrt(z);
}

bool in_cut_plane(cplx z) {
    if (z.real() == 0.0 && z.imag() == 0.0) return false;
    return !(z.imag() == 0.0 && z.real() <= 0.0);
}

double phase(cplx z) {
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw domain_error("phase: undefined for 0");
    z = normalize_zero(z);
    return std::arg(z);
}

} // namespace carlson
