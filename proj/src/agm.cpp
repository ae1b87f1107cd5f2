#include "carlson/agm.hpp"
#include <cmath>
#include <numbers>

namespace carlson {

namespace {

constexpr int agm_cap = 60;

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int scale_exponent(cplx x, cplx y) {
    int e = 0;
    std::frexp(std::max(std::abs(x), std::abs(y)), &e);
    return -(e >> 1);
}

cplx ldexp_c(cplx v, int k) {
    return {std::ldexp(v.real(), k), std::ldexp(v.imag(), k)};
}

} // namespace

complete_pair complete_rf_rg(cplx x, cplx y, double r) {
    require_tolerance(r, tol_cap_first_kind);
    if (!is_finite(x) || !is_finite(y))
        throw domain_error("complete_rf_rg: arguments must be finite");
    x = normalize_zero(x);
    y = normalize_zero(y);
    if (!in_cut_plane(x) || !in_cut_plane(y))
        throw domain_error("complete_rf_rg: arguments must be nonzero and off the nonpositive real axis");
    const cplx ratio = y / x;
    if (ratio.imag() == 0.0 && ratio.real() <= 0.0)
        throw domain_error("complete_rf_rg: arguments on opposite rays are outside the mean iteration's reach");

    const int k = scale_exponent(x, y);
    cplx xm = principal_sqrt(ldexp_c(x, 2 * k));
    cplx ym = principal_sqrt(ldexp_c(y, 2 * k));
    const cplx c0 = (xm + ym) / 2.0;
    cplx acc = 0.0;
    double pw = 0.5;  // 2^{m-2} for the term recorded after advance m
    int n = 0;
    const double stop = 2.7 * std::sqrt(r);
    while (std::abs(xm - ym) >= stop * std::abs(xm)) {
        if (n >= agm_cap)
            throw convergence_error("complete_rf_rg: mean iteration cap exceeded");
        const cplx g = principal_sqrt(xm * ym);
        xm = (xm + ym) / 2.0;
        ym = g;
        ++n;
        const cplx d = xm - ym;
        acc += pw * d * d;
        pw *= 2.0;
    }
    const cplx rf0 = std::numbers::pi / (xm + ym);
    const cplx rg0 = (c0 * c0 - acc) * rf0 / 2.0;
    return {ldexp_c(rf0, k), ldexp_c(rg0, -k), n};
}

cplx rd_complete(cplx y, cplx z, double r) {
    require_tolerance(r, tol_cap_third_kind);
    if (!is_finite(y) || !is_finite(z))
        throw domain_error("rd_complete: arguments must be finite");
    y = normalize_zero(y);
    z = normalize_zero(z);
    if (!in_cut_plane(y) || !in_cut_plane(z))
        throw domain_error("rd_complete: arguments must be nonzero and off the nonpositive real axis");
    if (y == z)  // closed form; the generic route divides by y - z
        return 0.75 * std::numbers::pi / (y * principal_sqrt(y));

    const int k = scale_exponent(y, z);
    const cplx ys = ldexp_c(y, 2 * k), zs = ldexp_c(z, 2 * k);
    const complete_pair cp = complete_rf_rg(ys, zs, r);
    const cplx v = 3.0 / (zs * (ys - zs)) * (2.0 * cp.rg0 - zs * cp.rf0);
    return ldexp_c(v, 3 * k);
}

} // namespace carlson
