#include "carlson/core.hpp"
#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

namespace carlson {

namespace {

constexpr int dup_cap = 120;

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
bool is_zero(cplx z) { return z.real() == 0.0 && z.imag() == 0.0; }
bool real_nonneg(cplx z) { return z.imag() == 0.0 && z.real() >= 0.0; }
bool real_neg(cplx z) { return z.imag() == 0.0 && z.real() < 0.0; }

void check_finite(std::initializer_list<cplx> args) {
    for (const cplx& a : args)
        if (!is_finite(a)) throw domain_error("arguments must be finite");
}

// Exponent k of the power-of-four factor 4^k that puts the largest argument
// modulus into [1/2, 2].  Scaling by an even power of two is exact, and the
// homogeneity unscaling factors 2^k and 2^{3k} are exact as well.
int scale_exponent(std::initializer_list<cplx> args) {
    double m = 0.0;
    for (const cplx& a : args) m = std::max(m, std::abs(a));
    int e = 0;
    std::frexp(m, &e);
    return -(e >> 1);
}

cplx ldexp_c(cplx v, int k) {
    return {std::ldexp(v.real(), k), std::ldexp(v.imag(), k)};
}

bool dup_done(const duplication_state& s) {
    // first index at which 4^{-m} Q drops below |A_m|
    return std::ldexp(s.Q, -2 * s.m) < std::abs(s.A);
}

void step_or_give_up(duplication_state& s, const char* who) {
    if (s.m >= dup_cap) throw convergence_error(std::string(who) + ": duplication cap exceeded");
    s = duplication_step(s);
}

eval_result rj_main(cplx x, cplx y, cplx z, cplx p, double r);

// Principal value for a real negative fourth argument: shift the pole to a
// positive location, evaluate there, and correct with first-kind and
// degenerate terms.  Sorting puts the median second, which keeps the shifted
// argument at least as large as it.
eval_result rj_pv(double x, double y, double z, double w, double r) {
    double v[3] = {x, y, z};
    std::sort(v, v + 3);
    x = v[0]; y = v[1]; z = v[2];
    const double q = -w;
    const double p = y + (z - y) * (y - x) / (y + q);
    eval_result rjv = rj_main(x, y, z, p, r);
    const eval_result rfv = rf(x, y, z, r);
    const double xz_pq = x * z + p * q;
    const eval_result rcv = rc(xz_pq, p * q, r);
    const cplx val = ((p - y) * rjv.value - 3.0 * rfv.value +
                      3.0 * std::sqrt(x * y * z / xz_pq) * rcv.value) / (y + q);
    return {val, r, rjv.n_iterations, false};
}

eval_result rj_main(cplx x, cplx y, cplx z, cplx p, double r) {
    const int k = scale_exponent({x, y, z, p});
    duplication_state s;
    s.x = ldexp_c(x, 2 * k);
    s.y = ldexp_c(y, 2 * k);
    s.z = ldexp_c(z, 2 * k);
    s.p = ldexp_c(p, 2 * k);
    s.has_p = true;
    s.A = (s.x + s.y + s.z + 2.0 * s.p) / 5.0;
    s.delta = (s.p - s.x) * (s.p - s.y) * (s.p - s.z);
    s.Q = std::pow(0.25 * r, -1.0 / 6.0) *
          std::max({std::abs(s.A - s.x), std::abs(s.A - s.y),
                    std::abs(s.A - s.z), std::abs(s.A - s.p)});
    const cplx dX = s.A - s.x, dY = s.A - s.y, dZ = s.A - s.z;
    cplx sum = 0.0;
    while (!dup_done(s)) {
        const double fm = std::ldexp(1.0, -2 * s.m);
        step_or_give_up(s, "rj");
        // d and e recorded by the step it just took
        sum += fm / s.d * rc(1.0, 1.0 + s.e, r).value;
    }
    const double f = std::ldexp(1.0, -2 * s.m);
    const cplx X = dX * f / s.A, Y = dY * f / s.A, Z = dZ * f / s.A;
    const cplx P = (-X - Y - Z) / 2.0;
    const cplx P2 = P * P;
    const cplx XYZ = X * Y * Z;
    const cplx E2 = X * Y + X * Z + Y * Z - 3.0 * P2;
    const cplx E3 = XYZ + 2.0 * E2 * P + 4.0 * P2 * P;
    const cplx E4 = (2.0 * XYZ + E2 * P + 3.0 * P2 * P) * P;
    const cplx E5 = XYZ * P2;
    const cplx series = 1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0 -
                        3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0;
    const cplx v = f * series / (s.A * principal_sqrt(s.A)) + 6.0 * sum;
    return {ldexp_c(v, 3 * k), r, s.m, false};
}

bool conj_pair(cplx a, cplx b) {
    return a.imag() != 0.0 && a.real() == b.real() && a.imag() == -b.imag();
}

} // namespace

void require_tolerance(double r, double cap) {
    if (!(r > 50.0 * std::numeric_limits<double>::epsilon()))
        throw domain_error("tolerance must exceed 50 machine epsilons");
    if (!(r <= cap))
        throw domain_error("tolerance too coarse for this function");
}

duplication_state duplication_step(const duplication_state& s) {
    duplication_state t = s;
    const cplx sx = principal_sqrt(s.x);
    const cplx sy = principal_sqrt(s.y);
    const cplx sz = principal_sqrt(s.z);
    const cplx lam = sx * sy + sx * sz + sy * sz;
    if (s.has_p) {
        const cplx sp = principal_sqrt(s.p);
        t.d = (sp + sx) * (sp + sy) * (sp + sz);
        t.e = ldexp_c(s.delta, -6 * s.m) / (t.d * t.d);  // 4^{-3m} delta / d^2
        t.p = (s.p + lam) / 4.0;
    }
    t.lam = lam;
    t.A = (s.A + lam) / 4.0;
    t.x = (s.x + lam) / 4.0;
    t.y = (s.y + lam) / 4.0;
    t.z = (s.z + lam) / 4.0;
    t.m = s.m + 1;
    return t;
}

eval_result rf(cplx x, cplx y, cplx z, double r) {
    require_tolerance(r, tol_cap_first_kind);
    check_finite({x, y, z});
    x = normalize_zero(x); y = normalize_zero(y); z = normalize_zero(z);
    if (is_zero(x) + is_zero(y) + is_zero(z) > 1)
        throw domain_error("rf: at most one argument may be 0");
    for (cplx a : {x, y, z})
        if (!is_zero(a) && !in_cut_plane(a))
            throw domain_error("rf: arguments must avoid the nonpositive real axis");

    const int k = scale_exponent({x, y, z});
    duplication_state s;
    s.x = ldexp_c(x, 2 * k);
    s.y = ldexp_c(y, 2 * k);
    s.z = ldexp_c(z, 2 * k);
    s.A = (s.x + s.y + s.z) / 3.0;
    s.Q = std::pow(3.0 * r, -1.0 / 6.0) *
          std::max({std::abs(s.A - s.x), std::abs(s.A - s.y), std::abs(s.A - s.z)});
    const cplx dX = s.A - s.x, dY = s.A - s.y;
    while (!dup_done(s)) step_or_give_up(s, "rf");
    const double f = std::ldexp(1.0, -2 * s.m);
    const cplx X = dX * f / s.A, Y = dY * f / s.A;
    const cplx Z = -X - Y;
    const cplx E2 = X * Y - Z * Z;
    const cplx E3 = X * Y * Z;
    const cplx series =
        1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0;
    const cplx v = series / principal_sqrt(s.A);
    return {ldexp_c(v, k), r, s.m, false};
}

eval_result rc(cplx x, cplx y, double r) {
    require_tolerance(r, tol_cap_degenerate);
    check_finite({x, y});
    x = normalize_zero(x); y = normalize_zero(y);
    if (is_zero(y)) throw domain_error("rc: second argument must be nonzero");
    if (!is_zero(x) && !in_cut_plane(x))
        throw domain_error("rc: first argument must be 0 or avoid the nonpositive real axis");
    if (real_neg(y)) {
        // Cauchy principal value: reflect the pole to the positive axis.
        // The prefactor vanishes with x, so rc(0, -q) = 0.
        const double q = -y.real();
        eval_result inner = rc(x + q, cplx(q, 0.0), r);
        inner.value *= principal_sqrt(x / (x + q));
        return inner;
    }

    const int k = scale_exponent({x, y});
    const cplx xs = ldexp_c(x, 2 * k), ys = ldexp_c(y, 2 * k);
    cplx A = (xs + 2.0 * ys) / 3.0;
    const cplx A0 = A;
    const double Q = std::pow(3.0 * r, -0.125) * std::abs(A - xs);
    cplx xm = xs, ym = ys;
    int m = 0;
    while (std::ldexp(Q, -2 * m) >= std::abs(A)) {
        if (m >= dup_cap) throw convergence_error("rc: duplication cap exceeded");
        const cplx lam = 2.0 * principal_sqrt(xm) * principal_sqrt(ym) + ym;
        A = (A + lam) / 4.0;
        xm = (xm + lam) / 4.0;
        ym = (ym + lam) / 4.0;
        ++m;
    }
    const cplx s = (ys - A0) * std::ldexp(1.0, -2 * m) / A;
    // tail of the expansion in s, through degree seven
    const cplx series =
        1.0 + s * s * (3.0 / 10.0 +
              s * (1.0 / 7.0 +
              s * (3.0 / 8.0 +
              s * (9.0 / 22.0 +
              s * (159.0 / 208.0 +
              s * (9.0 / 8.0))))));
    const cplx v = series / principal_sqrt(A);
    return {ldexp_c(v, k), r, m, false};
}

eval_result rj(cplx x, cplx y, cplx z, cplx p, double r, bool unchecked) {
    require_tolerance(r, tol_cap_third_kind);
    check_finite({x, y, z, p});
    x = normalize_zero(x); y = normalize_zero(y);
    z = normalize_zero(z); p = normalize_zero(p);
    if (is_zero(p)) throw domain_error("rj: fourth argument must be nonzero");

    const int zeros = is_zero(x) + is_zero(y) + is_zero(z);
    const bool xyz_real_nonneg =
        real_nonneg(x) && real_nonneg(y) && real_nonneg(z) && zeros <= 1;

    if (xyz_real_nonneg && real_neg(p))
        return rj_pv(x.real(), y.real(), z.real(), p.real(), r);

    bool admissible =
        // right-half-plane arguments with definite fourth variable
        (x.real() >= 0.0 && y.real() >= 0.0 && z.real() >= 0.0 && zeros <= 1 &&
         p.real() > 0.0) ||
        // real nonnegative triple, fourth variable off the cut
        (xyz_real_nonneg && in_cut_plane(p)) ||
        // one conjugate pair plus a real nonnegative third
        (in_cut_plane(p) && ((conj_pair(x, y) && real_nonneg(z)) ||
                             (conj_pair(x, z) && real_nonneg(y)) ||
                             (conj_pair(y, z) && real_nonneg(x))));
    if (!admissible && !unchecked)
        throw domain_error("rj: arguments fit no admissible class "
                           "(the unchecked override evaluates them anyway)");
    eval_result res = rj_main(x, y, z, p, r);
    res.unchecked = !admissible;
    return res;
}

eval_result rd(cplx x, cplx y, cplx z, double r) {
    require_tolerance(r, tol_cap_third_kind);
    check_finite({x, y, z});
    x = normalize_zero(x); y = normalize_zero(y); z = normalize_zero(z);
    if (is_zero(x) && is_zero(y))
        throw domain_error("rd: at most one of the first two arguments may be 0");
    if (!in_cut_plane(z))
        throw domain_error("rd: third argument must be nonzero and off the nonpositive real axis");
    for (cplx a : {x, y})
        if (!is_zero(a) && !in_cut_plane(a))
            throw domain_error("rd: arguments must avoid the nonpositive real axis");

    const int k = scale_exponent({x, y, z});
    duplication_state s;
    s.x = ldexp_c(x, 2 * k);
    s.y = ldexp_c(y, 2 * k);
    s.z = ldexp_c(z, 2 * k);
    s.A = (s.x + s.y + 3.0 * s.z) / 5.0;
    s.Q = std::pow(0.25 * r, -1.0 / 6.0) *
          std::max({std::abs(s.A - s.x), std::abs(s.A - s.y), std::abs(s.A - s.z)});
    const cplx dX = s.A - s.x, dY = s.A - s.y;
    cplx sum = 0.0;
    while (!dup_done(s)) {
        const double fm = std::ldexp(1.0, -2 * s.m);
        const cplx zm = s.z;
        step_or_give_up(s, "rd");
        sum += fm / (principal_sqrt(zm) * (zm + s.lam));
    }
    const double f = std::ldexp(1.0, -2 * s.m);
    const cplx X = dX * f / s.A, Y = dY * f / s.A;
    const cplx Z = -(X + Y) / 3.0;
    const cplx XY = X * Y, Z2 = Z * Z;
    const cplx E2 = XY - 6.0 * Z2;
    const cplx E3 = (3.0 * XY - 8.0 * Z2) * Z;
    const cplx E4 = 3.0 * (XY - Z2) * Z2;
    const cplx E5 = XY * Z2 * Z;
    const cplx series = 1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0 -
                        3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0;
    const cplx v = f * series / (s.A * principal_sqrt(s.A)) + 3.0 * sum;
    return {ldexp_c(v, 3 * k), r, s.m, false};
}

eval_result rg(cplx x, cplx y, cplx z, double r) {
    require_tolerance(r, tol_cap_third_kind);
    check_finite({x, y, z});
    x = normalize_zero(x); y = normalize_zero(y); z = normalize_zero(z);
    for (cplx a : {x, y, z})
        if (!is_zero(a) && !in_cut_plane(a))
            throw domain_error("rg: arguments must avoid the nonpositive real axis");
    const int zeros = is_zero(x) + is_zero(y) + is_zero(z);
    if (zeros == 3) throw domain_error("rg: at least one argument must be nonzero");
    if (zeros == 2) {
        const cplx nz = !is_zero(x) ? x : (!is_zero(y) ? y : z);
        return {principal_sqrt(nz) / 2.0, r, 0, false};
    }

    // Pivot on the largest modulus (ties keep the later slot), which makes
    // the evaluation independent of the argument order and keeps the
    // correction products small.
    cplx a[3] = {x, y, z};
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < 3; ++i) {
        const double m = std::abs(a[i]);
        if (m >= best) { best = m; pivot = i; }
    }
    std::swap(a[pivot], a[2]);

    const int k = scale_exponent({a[0], a[1], a[2]});
    const cplx xs = ldexp_c(a[0], 2 * k);
    const cplx ys = ldexp_c(a[1], 2 * k);
    const cplx zs = ldexp_c(a[2], 2 * k);
    const eval_result rfv = rf(xs, ys, zs, r);
    const eval_result rdv = rd(xs, ys, zs, r);
    const cplx root = principal_sqrt(xs) * principal_sqrt(ys) / principal_sqrt(zs);
    const cplx v =
        (zs * rfv.value - (xs - zs) * (ys - zs) * rdv.value / 3.0 + root) / 2.0;
    return {ldexp_c(v, -k), r, std::max(rfv.n_iterations, rdv.n_iterations), false};
}

} // namespace carlson
