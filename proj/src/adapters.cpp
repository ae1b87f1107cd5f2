#include "carlson/adapters.hpp"
#include <cmath>
#include <numbers>

namespace carlson {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

void require_amplitude(double phi) {
    if (!(phi >= 0.0 && phi <= half_pi))
        throw domain_error("amplitude must lie in [0, pi/2]");
}

void require_modulus_off_ray(cplx k2, const char* who) {
    if (k2.imag() == 0.0 && k2.real() >= 1.0)
        throw domain_error(std::string(who) + ": k^2 must avoid the ray [1, +inf)");
}

bool is_real(cplx z) { return z.imag() == 0.0; }

} // namespace

ke_pair complete_K_E(cplx k, double r) {
    const cplx k2 = k * k;
    require_modulus_off_ray(k2, "complete_K_E");
    const complete_pair cp = complete_rf_rg(1.0 - k2, 1.0, r);
    return {cp.rf0, 2.0 * cp.rg0};
}

cplx legendre_F(double phi, cplx k, double r) {
    require_amplitude(phi);
    if (phi == 0.0) return 0.0;
    if (phi == half_pi) return complete_K_E(k, r).K;
    const double sp = std::sin(phi), cp = std::cos(phi);
    return sp * rf(cplx(cp * cp), 1.0 - k * k * (sp * sp), 1.0, r).value;
}

cplx legendre_E_inc(double phi, cplx k, double r) {
    require_amplitude(phi);
    if (phi == 0.0) return 0.0;
    if (phi == half_pi) return complete_K_E(k, r).E;
    const double sp = std::sin(phi);
    const cplx c = 1.0 / cplx(sp * sp);
    const cplx k2 = k * k;
    return rf(c - 1.0, c - k2, c, r).value -
           k2 / 3.0 * rd(c - 1.0, c - k2, c, r).value;
}

cplx legendre_Pi(double phi, cplx k, double n, double r) {
    require_amplitude(phi);
    if (phi == 0.0) return 0.0;
    const double sp = std::sin(phi);
    const double c = (phi == half_pi) ? 1.0 : 1.0 / (sp * sp);
    if (c + n == 0.0)
        throw domain_error("legendre_Pi: the characteristic cancels the endpoint (c + n = 0)");
    const cplx k2 = k * k;
    const cplx first = (phi == half_pi)
                           ? complete_K_E(k, r).K
                           : rf(cplx(c - 1.0), c - k2, cplx(c), r).value;
    if (n == 0.0) return first;  // collapses to the first kind
    const cplx third = rj(cplx(c - 1.0), c - k2, cplx(c), cplx(c + n), r).value;
    return first - n / 3.0 * third;
}

cplx legendre_D(double phi, cplx k, double r) {
    require_amplitude(phi);
    if (phi == 0.0) return 0.0;
    const double sp = std::sin(phi);
    const double c = (phi == half_pi) ? 1.0 : 1.0 / (sp * sp);
    return rd(cplx(c - 1.0), c - k * k, cplx(c), r).value / 3.0;
}

cplx jacobi_zeta(double beta, cplx k, double r) {
    if (!(beta >= -half_pi && beta <= half_pi))
        throw domain_error("jacobi_zeta: |beta| must not exceed pi/2");
    const cplx k2 = k * k;
    require_modulus_off_ray(k2, "jacobi_zeta");
    if (beta == 0.0 || beta == half_pi || beta == -half_pi || k2 == 0.0)
        return 0.0;
    const double sb = std::sin(beta), cb = std::cos(beta);
    const cplx d2 = 1.0 - k2 * (sb * sb);
    const cplx num = k2 / 3.0 * sb * cb * principal_sqrt(d2) *
                     rj(0.0, 1.0 - k2, 1.0, d2, r).value;
    return num / complete_K_E(k, r).K;
}

cplx heuman_lambda(double beta, double k, double r) {
    if (!(beta >= 0.0 && beta < half_pi))
        throw domain_error("heuman_lambda: beta must lie in [0, pi/2)");
    const double k2 = k * k;
    if (!(k2 >= 0.0 && k2 < 1.0))
        throw domain_error("heuman_lambda: needs a real modulus with k^2 < 1");
    if (beta == 0.0) return 0.0;
    const double sb = std::sin(beta), cb = std::cos(beta);
    const double kp2 = 1.0 - k2;             // complementary modulus, squared
    const double d2 = 1.0 - kp2 * (sb * sb); // Delta^2, in (0, 1]
    cplx bracket = rf(0.0, kp2, 1.0, r).value;
    if (k2 != 0.0)
        bracket += k2 / (3.0 * d2) * rj(0.0, kp2, 1.0, 1.0 - k2 / d2, r).value;
    return 2.0 / std::numbers::pi * (kp2 * sb * cb / std::sqrt(d2)) * bracket;
}

cplx el1(double x, cplx kc, double r) {
    if (x == 0.0) return 0.0;
    const double x2 = x * x;
    return x * rf(1.0, 1.0 + kc * kc * x2, 1.0 + x2, r).value;
}

cplx el2(double x, cplx kc, cplx a, cplx b, double r) {
    if (x == 0.0) return 0.0;
    const double x2 = x * x;
    const cplx y = 1.0 + kc * kc * x2, z = 1.0 + x2;
    cplx v = a * x * rf(1.0, y, z, r).value;
    if (b != a)
        v += (b - a) / 3.0 * (x2 * x) * rd(1.0, y, z, r).value;
    return v;
}

cplx el3(double x, cplx kc, cplx p, double r) {
    if (x == 0.0) return 0.0;
    const double x2 = x * x;
    const cplx y = 1.0 + kc * kc * x2, z = 1.0 + x2;
    cplx v = x * rf(1.0, y, z, r).value;
    if (p != cplx(1.0))
        v += (1.0 - p) / 3.0 * (x2 * x) * rj(1.0, y, z, 1.0 + p * x2, r).value;
    return v;
}

cplx cel(cplx kc, cplx p, cplx a, cplx b, double r) {
    const cplx kc2 = kc * kc;
    cplx v = a * rf(0.0, kc2, 1.0, r).value;
    if (b != p * a)
        v += (b - p * a) / 3.0 * rj(0.0, kc2, 1.0, p, r).value;
    return v;
}

cplx inverse_via_rc(inverse_kind kind, cplx x, cplx y, double r) {
    const bool both_real = is_real(x) && is_real(y);
    const double a = x.real(), b = y.real();
    switch (kind) {
    case inverse_kind::log_ratio: {
        if (both_real && !(a > 0.0 && b > 0.0))
            throw domain_error("log_ratio: needs x > 0 and y > 0");
        const cplx m = (x + y) / 2.0;
        return (x - y) * rc(m * m, x * y, r).value;
    }
    case inverse_kind::arctan:
        if (both_real && !(b > 0.0))
            throw domain_error("arctan: needs y > 0");
        return x * rc(y * y, y * y + x * x, r).value;
    case inverse_kind::arctanh:
        if (both_real && !(b > 0.0 && -b < a && a < b))
            throw domain_error("arctanh: needs -y < x < y");
        return x * rc(y * y, y * y - x * x, r).value;
    case inverse_kind::arcsin:
        if (both_real && !(b > 0.0 && -b <= a && a <= b))
            throw domain_error("arcsin: needs -y <= x <= y");
        return x * rc(y * y - x * x, y * y, r).value;
    case inverse_kind::arcsinh:
        if (both_real && !(b > 0.0))
            throw domain_error("arcsinh: needs y > 0");
        return x * rc(y * y + x * x, y * y, r).value;
    case inverse_kind::arccos:
        if (both_real && !(b > 0.0 && 0.0 <= a && a <= b))
            throw domain_error("arccos: needs 0 <= x <= y");
        return principal_sqrt(y * y - x * x) * rc(x * x, y * y, r).value;
    case inverse_kind::arccosh:
        if (both_real && !(b > 0.0 && a >= b))
            throw domain_error("arccosh: needs x >= y > 0");
        return principal_sqrt(x * x - y * y) * rc(x * x, y * y, r).value;
    }
    throw domain_error("inverse_via_rc: unknown kind");
}

} // namespace carlson
