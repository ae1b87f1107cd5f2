#include <doctest.h>
#include "carlson/quartic.hpp"
#include "carlson/oracle.hpp"
#include <cmath>
#include <limits>
#include <random>

using namespace carlson;

namespace {

quartic_spec make(quadratic q1, quadratic q2, double lo, double hi) {
    quartic_spec sp;
    sp.q1 = q1;
    sp.q2 = q2;
    sp.lower = lo;
    sp.upper = hi;
    return sp;
}

quartic_spec make_inf(quadratic q1, quadratic q2, double lo) {
    quartic_spec sp;
    sp.q1 = q1;
    sp.q2 = q2;
    sp.lower = lo;
    sp.upper_infinite = true;
    return sp;
}

// quadratic with real zeros z1, z2 and unit leading coefficient
quadratic from_zeros(double z1, double z2) {
    return {z1 * z2, -(z1 + z2) / 2.0, 1.0};
}

// quadratic with zeros a +- b i
quadratic from_pair(double a, double b) {
    return {a * a + b * b, -a, 1.0};
}

double quad_of(const quartic_spec& sp, double tol) {
    auto f = [&](double t) {
        return cplx(1.0 / std::sqrt(sp.q1(t) * sp.q2(t)));
    };
    if (!sp.upper_infinite)
        return integrate(f, sp.lower, sp.upper, tol).real();
    // u = 1/(1 + t - lower) maps the tail onto (0, 1]
    auto g = [&](double u) {
        const double t = sp.lower + (1.0 - u) / u;
        return cplx(1.0 / (u * u * std::sqrt(sp.q1(t) * sp.q2(t))));
    };
    return integrate(g, 0.0, 1.0, tol).real();
}

} // namespace

TEST_CASE("worked examples") {
    const double r = 1e-12;
    // unit integrand: the reduction must return the interval length untouched
    CHECK(std::abs(eval_quartic(make({1, 0, 0}, {1, 0, 0}, 0, 3), r) - 3.0) < 3e-15);
    // lemniscatic: (1 - t^2)(1 + t^2) over [0, 1], simple zero at the endpoint
    CHECK(std::abs(eval_quartic(make({1, 0, -1}, {1, 0, 1}, 0, 1), r) -
                   1.3110287771461) < 1e-11);
    // t (t^2 - 1) over [1, inf): twice the previous value
    CHECK(std::abs(eval_quartic(make_inf({0, 0.5, 0}, {-1, 0, 1}, 1), r) -
                   2.6220575542922) < 2e-11);
}

TEST_CASE("automatic split when both zero pairs are complex") {
    const double r = 1e-12;
    // zeros 1 +- i and 4 +- 2i; the diagonals cross at t = 2, inside [0, 6].
    // A single reduction lands on the wrong sheet and gives ~0.677.
    const quartic_spec sp = make({2, -1, 1}, {20, -4, 1}, 0, 6);
    CHECK(std::abs(eval_quartic(sp, r) - 1.1184281401467155) < 1e-12);

    // random both-complex specs against direct quadrature
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 12; ++t) {
        const double lo = -2.0 + 4.0 * u(rng);
        const double hi = lo + 1.0 + 6.0 * u(rng);
        const quartic_spec s = make(from_pair(lo + (hi - lo) * u(rng), 0.2 + 2.0 * u(rng)),
                                    from_pair(lo + (hi - lo) * u(rng), 0.2 + 2.0 * u(rng)),
                                    lo, hi);
        const double got = eval_quartic(s, 1e-10);
        const double want = quad_of(s, 1e-11);
        CHECK(std::abs(got - want) < 1e-8 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("interval additivity") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = 1e-11;
    for (int t = 0; t < 40; ++t) {
        const double lo = -1.0 + 2.0 * u(rng);
        const double hi = lo + 0.5 + 3.0 * u(rng);
        // zeros strictly below the interval keep both factors positive
        const quadratic q1 = from_zeros(lo - 0.2 - u(rng), lo - 0.2 - u(rng));
        const quadratic q2 = (t % 2) ? from_pair(lo + (hi - lo) * u(rng), 0.5 + u(rng))
                                     : from_zeros(hi + 0.2 + u(rng), hi + 0.2 + u(rng));
        const double mid = lo + (hi - lo) * (0.3 + 0.4 * u(rng));
        const double whole = eval_quartic(make(q1, q2, lo, hi), r);
        const double parts = eval_quartic(make(q1, q2, lo, mid), r) +
                             eval_quartic(make(q1, q2, mid, hi), r);
        CHECK(std::abs(whole - parts) < 6 * r * std::abs(whole));
    }
}

TEST_CASE("shift and scale invariance") {
    const double r = 1e-11;
    const quartic_spec base = make(from_zeros(-1.0, -0.5), from_pair(1.0, 2.0), 0, 2);
    const double v = eval_quartic(base, r);

    // scaling one factor by c scales the value by 1/sqrt(c)
    quartic_spec scaled = base;
    scaled.q1 = {4 * base.q1.f, 4 * base.q1.g, 4 * base.q1.h};
    CHECK(std::abs(eval_quartic(scaled, r) - v / 2.0) < 6 * r * v);

    // translating the variable leaves the value alone
    const double s = 0.75;
    auto shift = [&](const quadratic& q) {
        return quadratic{q.f + 2 * q.g * s + q.h * s * s, q.g + q.h * s, q.h};
    };
    const quartic_spec moved = make(shift(base.q1), shift(base.q2), -s, 2 - s);
    CHECK(std::abs(eval_quartic(moved, r) - v) < 6 * r * v);
}

TEST_CASE("reduction intermediates classify V") {
    // both pairs real: V real
    const reduction_intermediates both_real =
        reduce(make({-1, 0, 1}, {-0.25, 0, 1}, 2, 3));
    CHECK(both_real.V.imag() == 0.0);
    CHECK(both_real.V.real() > 0.0);

    // one complex pair: V pure imaginary, and the first-kind call still
    // produces a real value because its first two arguments are conjugate
    const quartic_spec mixed = make({1, 0, 1}, {-0.25, 0, 1}, 2, 3);
    const reduction_intermediates m = reduce(mixed);
    CHECK(m.V.real() == 0.0);
    CHECK(m.V.imag() > 0.0);
    const double w = m.U * m.U + m.T;
    const cplx raw = rf(w + m.V, w - m.V, cplx(m.U * m.U), 1e-12).value;
    CHECK(std::abs(raw.imag()) < 1e-14 * std::abs(raw.real()));

    // both pairs complex: V real again
    const reduction_intermediates both_cplx =
        reduce(make({2, -1, 1}, {20, -4, 1}, 2.5, 3));
    CHECK(both_cplx.V.imag() == 0.0);

    // endpoint values come back for callers that want them
    CHECK(m.q1y == mixed.q1(2.0));
    CHECK(m.q2x == mixed.q2(3.0));
    CHECK(reduce(make_inf({0, 0.5, 0}, {-1, 0, 1}, 1)).q1x ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("spec validation") {
    // a zero strictly inside the interval
    CHECK_THROWS_AS((void)eval_quartic(make({-1, 0, 1}, {1, 0, 0}, 0, 2)), domain_error);
    // linear factor vanishing inside
    CHECK_THROWS_AS((void)eval_quartic(make({-2, 1, 0}, {1, 0, 1}, 0, 2)), domain_error);
    // double zero at an endpoint is not integrable
    CHECK_THROWS_AS((void)eval_quartic(make({1, -1, 1}, {1, 0, 0}, 1, 2)), domain_error);
    CHECK_THROWS_AS((void)eval_quartic(make({1, -1, 1}, {1, 0, 0}, 0, 1)), domain_error);
    // both factors vanishing at the same endpoint is not integrable either
    CHECK_THROWS_AS((void)eval_quartic(make({0, 0.5, 0}, {0, 1, 0}, 0, 1)), domain_error);
    // a simple zero at one endpoint of one factor is fine
    CHECK_NOTHROW((void)eval_quartic(make({0, 0.5, 0}, {1, 0, 1}, 0, 1)));
    // negative constant factor
    CHECK_THROWS_AS((void)eval_quartic(make({-1, 0, 0}, {1, 0, 1}, 0, 1)), domain_error);
    // all coefficients zero
    CHECK_THROWS_AS((void)eval_quartic(make({0, 0, 0}, {1, 0, 1}, 0, 1)), domain_error);
    // interval must be ordered and finite
    CHECK_THROWS_AS((void)eval_quartic(make({1, 0, 0}, {1, 0, 1}, 2, 2)), domain_error);
    CHECK_THROWS_AS((void)eval_quartic(make({1, 0, 0}, {1, 0, 1}, 3, 2)), domain_error);
    CHECK_THROWS_AS((void)eval_quartic(
                        make({1, 0, 0}, {1, 0, 1},
                             std::numeric_limits<double>::infinity(), 2)),
                    domain_error);
    CHECK_THROWS_AS((void)eval_quartic(
                        make({1, 0, 0}, {1, 0, 1}, 0,
                             std::numeric_limits<double>::quiet_NaN())),
                    domain_error);
    // infinite upper limit: the product must grow at least cubically
    CHECK_THROWS_AS((void)eval_quartic(make_inf({0, 0.5, 0}, {1, 0.5, 0}, 1)), domain_error);
    CHECK_THROWS_AS((void)eval_quartic(make_inf({1, 0, 1}, {1, 0, 0}, 0)), domain_error);
    // ... and stay positive out there
    CHECK_THROWS_AS((void)eval_quartic(make_inf({1, 0, -1}, {1, 0, 1}, 2)), domain_error);
    CHECK_THROWS_AS((void)eval_quartic(make_inf({1, -1, 0}, {1, 0, 1}, 0)), domain_error);
    // tolerance window applies here as well
    CHECK_THROWS_AS((void)eval_quartic(make({1, 0, 0}, {1, 0, 1}, 0, 1), 1e-17), domain_error);
}

TEST_CASE("agreement with direct quadrature") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 25; ++t) {
        const double lo = -2.0 + 4.0 * u(rng);
        const double hi = lo + 0.5 + 4.0 * u(rng);
        auto factor = [&]() -> quadratic {
            switch (int(3.0 * u(rng))) {
            case 0: return from_zeros(lo - 0.3 - 2.0 * u(rng), lo - 0.3 - 2.0 * u(rng));
            case 1: return from_zeros(hi + 0.3 + 2.0 * u(rng), hi + 0.3 + 2.0 * u(rng));
            default: return from_pair(lo + (hi - lo) * u(rng), 0.4 + 2.0 * u(rng));
            }
        };
        quartic_spec sp = make(factor(), factor(), lo, hi);
        const double got = eval_quartic(sp, 1e-10);
        const double want = quad_of(sp, 1e-11);
        CHECK(std::abs(got - want) < 1e-8 * std::max(1.0, std::abs(want)));
    }

    // an infinite-limit spec against the substituted tail integral
    const quartic_spec inf_sp = make_inf(from_zeros(-1.0, 0.5), from_pair(0.0, 1.5), 1.0);
    CHECK(std::abs(eval_quartic(inf_sp, 1e-10) - quad_of(inf_sp, 1e-11)) < 1e-8);
}
