#include "carlson/quartic.hpp"
#include <cmath>
#include <limits>
#include <numbers>

namespace carlson {

namespace {

struct zero_info {
    bool complex_pair = false;
    double a = 0, b = 0;    // zeros a +- b i when complex_pair (b > 0)
    int nreal = 0;          // number of real zeros (counting a double zero once)
    double r1 = 0, r2 = 0;  // real zeros, r1 <= r2
    bool double_zero = false;
};

zero_info analyze(const quadratic& q) {
    zero_info info;
    if (q.h != 0.0) {
        const double disc = q.g * q.g - q.f * q.h;  // quarter discriminant
        if (disc < 0.0) {
            info.complex_pair = true;
            info.a = -q.g / q.h;
            info.b = std::sqrt(-disc) / std::abs(q.h);
        } else {
            const double s = std::sqrt(disc);
            double lo = (-q.g - s) / q.h, hi = (-q.g + s) / q.h;
            if (lo > hi) std::swap(lo, hi);
            info.nreal = 2;
            info.r1 = lo;
            info.r2 = hi;
            info.double_zero = (disc == 0.0);
        }
    } else if (q.g != 0.0) {
        info.nreal = 1;
        info.r1 = info.r2 = -q.f / (2.0 * q.g);
    } else if (q.f == 0.0) {
        throw domain_error("quartic: a quadratic has all coefficients zero");
    }
    return info;
}

int degree(const quadratic& q) { return q.h != 0.0 ? 2 : (q.g != 0.0 ? 1 : 0); }

void validate(const quartic_spec& sp) {
    if (!std::isfinite(sp.lower))
        throw domain_error("quartic: lower limit must be finite");
    if (!sp.upper_infinite &&
        (!std::isfinite(sp.upper) || !(sp.upper > sp.lower)))
        throw domain_error("quartic: upper limit must exceed the lower limit");

    for (const quadratic* q : {&sp.q1, &sp.q2}) {
        const zero_info in = analyze(*q);
        const auto inside = [&](double t) {
            if (!(t > sp.lower)) return false;
            return sp.upper_infinite || t < sp.upper;
        };
        if (in.nreal > 0 && (inside(in.r1) || inside(in.r2)))
            throw domain_error("quartic: a quadratic vanishes inside the interval");
        if (in.double_zero &&
            (in.r1 == sp.lower || (!sp.upper_infinite && in.r1 == sp.upper)))
            throw domain_error("quartic: double zero at an endpoint");
        if (sp.upper_infinite) {
            if (q->h < 0.0 || (q->h == 0.0 && q->g < 0.0) ||
                (q->h == 0.0 && q->g == 0.0 && q->f <= 0.0))
                throw domain_error("quartic: a quadratic is nonpositive at large t");
        }
    }
    if (sp.q1(sp.lower) == 0.0 && sp.q2(sp.lower) == 0.0)
        throw domain_error("quartic: both quadratics vanish at the lower endpoint");
    if (!sp.upper_infinite && sp.q1(sp.upper) == 0.0 && sp.q2(sp.upper) == 0.0)
        throw domain_error("quartic: both quadratics vanish at the upper endpoint");
    if (sp.upper_infinite && degree(sp.q1) + degree(sp.q2) < 3)
        throw domain_error("quartic: the integral diverges at the infinite limit");

    // endpoint-clustered interior samples; a clean sign analysis above plus
    // these catch nonpositive specs without solving anything else
    for (int j = 0; j < 33; ++j) {
        const double c = std::cos((2 * j + 1) * std::numbers::pi / 66.0);
        const double t = sp.upper_infinite
                             ? sp.lower + (1.0 + c) / (1.0 - c)
                             : 0.5 * ((sp.lower + sp.upper) + (sp.upper - sp.lower) * c);
        if (!(sp.q1(t) > 0.0) || !(sp.q2(t) > 0.0))
            throw domain_error("quartic: integrand not positive inside the interval");
    }
}

double eval_impl(const quartic_spec& sp, double r, bool allow_split) {
    if (allow_split) {
        const zero_info i1 = analyze(sp.q1), i2 = analyze(sp.q2);
        if (i1.complex_pair && i2.complex_pair) {
            // both quadrilateral diagonals cross the axis here
            const double tstar = (i1.a * i2.b + i2.a * i1.b) / (i1.b + i2.b);
            bool interior;
            if (sp.upper_infinite) {
                const double scale = std::max({std::abs(sp.lower), std::abs(tstar), 1.0});
                interior = tstar > sp.lower + 8.0 * std::numeric_limits<double>::epsilon() * scale;
            } else {
                const double margin =
                    8.0 * (std::nextafter(sp.upper - sp.lower,
                                          std::numeric_limits<double>::infinity()) -
                           (sp.upper - sp.lower));
                interior = tstar > sp.lower + margin && tstar < sp.upper - margin;
            }
            if (interior) {
                quartic_spec left = sp;
                left.upper = tstar;
                left.upper_infinite = false;
                quartic_spec right = sp;
                right.lower = tstar;
                return eval_impl(left, r, false) + eval_impl(right, r, false);
            }
        }
    }
    const reduction_intermediates ri = reduce(sp);
    const double w = ri.U * ri.U + ri.T;
    const cplx val = 2.0 * rf(w + ri.V, w - ri.V, cplx(ri.U * ri.U), r).value;
    return val.real();
}

} // namespace

reduction_intermediates reduce(const quartic_spec& sp) {
    validate(sp);
    reduction_intermediates ri;
    ri.q1y = sp.q1(sp.lower);
    ri.q2y = sp.q2(sp.lower);
    if (sp.upper_infinite) {
        ri.q1x = ri.q2x = std::numeric_limits<double>::infinity();
        ri.U = std::sqrt(sp.q1.h * ri.q2y) + std::sqrt(ri.q1y * sp.q2.h);
    } else {
        ri.q1x = sp.q1(sp.upper);
        ri.q2x = sp.q2(sp.upper);
        ri.U = (std::sqrt(ri.q1x * ri.q2y) + std::sqrt(ri.q1y * ri.q2x)) /
               (sp.upper - sp.lower);
    }
    ri.T = 2.0 * sp.q1.g * sp.q2.g - sp.q1.f * sp.q2.h - sp.q2.f * sp.q1.h;
    const double d1 = sp.q1.g * sp.q1.g - sp.q1.f * sp.q1.h;
    const double d2 = sp.q2.g * sp.q2.g - sp.q2.f * sp.q2.h;
    ri.V = 2.0 * principal_sqrt(cplx(d1 * d2, 0.0));
    return ri;
}

double eval_quartic(const quartic_spec& sp, double r) {
    require_tolerance(r, tol_cap_first_kind);
    return eval_impl(sp, r, true);
}

} // namespace carlson
