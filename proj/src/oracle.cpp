#include "carlson/oracle.hpp"
#include <cmath>

namespace carlson {

namespace {

// 15-point nodes (positive half) with their weights, and the weights of the
// embedded 7-point rule at every second node.
constexpr double nodes[8] = {
    0.991455371120812639207, 0.949107912342758524526, 0.864864423359769072790,
    0.741531185599394439864, 0.586087235467691130295, 0.405845151377397166907,
    0.207784955007898467601, 0.0};
constexpr double wk[8] = {
    0.022935322010529224964, 0.063092092629978553291, 0.104790010322250183840,
    0.140653259715525918745, 0.169004726639267902827, 0.190350578064785409913,
    0.204432940075298892414, 0.209482141084727828013};
constexpr double wg[4] = {
    0.129484966168869693271, 0.279705391489276667901, 0.381830050505118944950,
    0.417959183673469387755};

struct panel {
    cplx value{};
    double err = 0;
};

panel rule(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const cplx fc = f(c);
    cplx k = wk[7] * fc;
    cplx g = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const cplx s = f(c + h * nodes[i]) + f(c - h * nodes[i]);
        k += wk[i] * s;
        if (i % 2 == 1) g += wg[i / 2] * s;
    }
    return {k * h, std::abs(k - g) * std::abs(h)};
}

cplx adapt(const std::function<cplx(double)>& f, double a, double b,
           double tol, int depth) {
    const panel p = rule(f, a, b);
    if (p.err <= tol) return p.value;
    if (depth >= 44) {
        if (p.err > 50.0 * tol)
            throw convergence_error("oracle: quadrature failed to converge");
        return p.value;
    }
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1) +
           adapt(f, m, b, 0.5 * tol, depth + 1);
}

using integrand = std::function<cplx(double)>;

// integral over [0, c]; t = u^2 flattens a possible 1/sqrt(t) endpoint
cplx head(const integrand& f, double c, double tol) {
    return integrate([&](double u) { return f(u * u) * (2.0 * u); },
                     0.0, std::sqrt(c), tol);
}

// integral over [a, +inf); t = a/u^2 maps it onto (0, 1]
cplx tail(const integrand& f, double a, double tol) {
    return integrate(
        [&](double u) { return f(a / (u * u)) * (2.0 * a / (u * u * u)); },
        0.0, 1.0, tol);
}

struct assembled {
    cplx value{};
    double mass = 0;  // sum of piece magnitudes, for scaling the tolerance
};

assembled assemble(const integrand& f, double pole, double tol) {
    if (pole == 0.0) {
        const cplx h = head(f, 1.0, tol);
        const cplx t = tail(f, 1.0, tol);
        return {h + t, std::abs(h) + std::abs(t)};
    }
    // symmetric excision of radius h around the pole, then a Richardson pass
    // over h, h/2, h/4, h/8 removing the odd error powers h, h^3, h^5
    const double far = 2.0 * pole + 2.0;
    const cplx t = tail(f, far, tol);
    double mass = std::abs(t);
    cplx p[4];
    double h = pole / 4.0;
    for (int j = 0; j < 4; ++j, h /= 2.0) {
        const cplx lo = head(f, pole - h, tol);
        const cplx mid = integrate(f, pole + h, far, tol);
        p[j] = lo + mid + t;
        mass = std::max(mass, std::abs(lo) + std::abs(mid) + std::abs(t));
    }
    const cplx u0 = 2.0 * p[1] - p[0], u1 = 2.0 * p[2] - p[1], u2 = 2.0 * p[3] - p[2];
    const cplx v0 = (8.0 * u1 - u0) / 7.0, v1 = (8.0 * u2 - u1) / 7.0;
    return {(32.0 * v1 - v0) / 31.0, mass};
}

} // namespace

cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               double tol) {
    if (!(b > a)) {
        if (b == a) return 0.0;
        throw domain_error("integrate: bounds out of order");
    }
    return adapt(f, a, b, tol, 0);
}

cplx oracle_eval(const oracle_spec& spec) {
    if (!(spec.target >= 1e-9))
        throw domain_error("oracle: target cannot be tightened below 1e-9");

    const cplx x = spec.x, y = spec.y, z = spec.z, p = spec.p;
    const auto ps = [](cplx w) { return principal_sqrt(w); };

    integrand f;
    double pole = 0.0;
    switch (spec.kind) {
    case integral_kind::rf:
        f = [=](double t) {
            return 0.5 / (ps(t + x) * ps(t + y) * ps(t + z));
        };
        break;
    case integral_kind::rc:
        if (y.imag() == 0.0 && y.real() < 0.0) pole = -y.real();
        f = [=](double t) { return 0.5 / (ps(t + x) * (t + y)); };
        break;
    case integral_kind::rj:
        if (p.imag() == 0.0 && p.real() < 0.0) pole = -p.real();
        f = [=](double t) {
            return 1.5 / (ps(t + x) * ps(t + y) * ps(t + z) * (t + p));
        };
        break;
    case integral_kind::rd:
        f = [=](double t) {
            return 1.5 / (ps(t + x) * ps(t + y) * ps(t + z) * (t + z));
        };
        break;
    case integral_kind::rg:
        f = [=](double t) {
            const cplx w = ps(t + x) * ps(t + y) * ps(t + z);
            return 0.25 * t * (x / (t + x) + y / (t + y) + z / (t + z)) / w;
        };
        break;
    }
    if (spec.principal_value && pole == 0.0)
        throw domain_error("oracle: principal value needs a real negative pole argument");

    // coarse pass sizes the absolute tolerance for the accurate one
    const assembled coarse = assemble(f, pole, 1e-6);
    const double scale =
        std::max({std::abs(coarse.value), coarse.mass / 20.0, 1e-6});
    const double tol = spec.target * scale / (pole > 0.0 ? 100.0 : 25.0);
    return assemble(f, pole, tol).value;
}

} // namespace carlson
