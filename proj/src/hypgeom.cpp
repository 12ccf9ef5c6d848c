#include "atlas/hypgeom.hpp"

#include <cmath>

#include "atlas/errors.hpp"

namespace atlas {

SquareData square_data() {
    SquareData sq;
    const double root = std::pow(2.0, -0.25); // sqrt(cos(pi/4))
    sq.t = std::asinh(root);
    sq.opposite_side_distance = 2.0 * sq.t;
    sq.side_half = std::atanh(root);
    sq.side = 2.0 * sq.side_half;
    sq.basic_pair_distance = sq.side;
    sq.systole_length = 2.0 * sq.side;
    return sq;
}

namespace {

// b as a function of s from the first defining relation
// sinh(s/2) sinh(s/6) = cosh(b/4); only defined once the product reaches 1.
double pentagon_b(double s) {
    return 4.0 * std::acosh(std::sinh(s / 2.0) * std::sinh(s / 6.0));
}

// second defining relation reduced to one variable:
// F(s) = sinh(s/4) sinh(b(s)/4) - cosh(s/2)
double pentagon_f(double s) {
    return std::sinh(s / 4.0) * std::sinh(pentagon_b(s) / 4.0) - std::cosh(s / 2.0);
}

double pentagon_f_prime(double s) {
    const double u = std::sinh(s / 2.0) * std::sinh(s / 6.0);
    const double du = std::cosh(s / 2.0) * std::sinh(s / 6.0) / 2.0 +
                      std::sinh(s / 2.0) * std::cosh(s / 6.0) / 6.0;
    const double b4 = std::acosh(u);           // b/4
    const double db4 = du / std::sqrt(u * u - 1.0);
    return std::cosh(s / 4.0) * std::sinh(b4) / 4.0 +
           std::sinh(s / 4.0) * std::cosh(b4) * db4 - std::sinh(s / 2.0) / 2.0;
}

} // namespace

PentagonData solve_pentagon(double tolerance) {
    if (!(tolerance > 0.0)) throw ParamError("tolerance must be positive");

    // bracket the root by coarse scan; F is monotone once defined
    double lo = 0.0, hi = 0.0;
    double prev_s = 0.0, prev_f = 0.0;
    bool have_prev = false;
    for (double s = 0.1; s <= 20.0 + 1e-9; s += 0.1) {
        if (std::sinh(s / 2.0) * std::sinh(s / 6.0) <= 1.0) continue;
        double f = pentagon_f(s);
        if (have_prev && prev_f < 0.0 && f >= 0.0) {
            lo = prev_s;
            hi = s;
            break;
        }
        prev_s = s;
        prev_f = f;
        have_prev = true;
    }
    if (hi == 0.0) throw ConvergenceError("no sign change on the scan interval");

    // damped Newton, falling back to bisection whenever a step leaves the
    // bracket; the bracket shrinks every iteration either way
    double s = 0.5 * (lo + hi);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        double f = pentagon_f(s);
        if (f < 0.0) lo = s; else hi = s;
        double fp = pentagon_f_prime(s);
        double next = fp != 0.0 ? s - f / fp : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        double step = std::fabs(next - s);
        s = next;
        if (std::fabs(f) < tolerance && step < tolerance * std::fmax(1.0, std::fabs(s))) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("pentagon solve did not converge");

    PentagonData pent;
    pent.s = s;
    pent.b = pentagon_b(s);
    pent.c = s / 12.0;
    pent.sides = {s / 2.0, s / 6.0, s / 4.0, pent.b / 4.0, pent.c};
    for (int i = 0; i < 5; ++i) {
        pent.residuals[i] = std::sinh(pent.sides[i]) * std::sinh(pent.sides[(i + 1) % 5]) -
                            std::cosh(pent.sides[(i + 3) % 5]);
    }
    pent.best_fit_c = std::acosh(std::sinh(s / 6.0) * std::sinh(s / 4.0));
    pent.c_is_s_over_12 = std::fabs(pent.residuals[1]) <= 1e-6 &&
                          std::fabs(pent.residuals[3]) <= 1e-6 &&
                          std::fabs(pent.residuals[4]) <= 1e-6;
    return pent;
}

double pants_cuff_distance(double l1, double l2, double l3) {
    if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
        throw DomainError("cuff lengths must be positive");
    const double num = std::cosh(l3 / 2.0) + std::cosh(l1 / 2.0) * std::cosh(l2 / 2.0);
    const double den = std::sinh(l1 / 2.0) * std::sinh(l2 / 2.0);
    return std::acosh(num / den);
}

double collar_width(double l) {
    if (!(l > 0.0)) throw DomainError("geodesic length must be positive");
    return std::asinh(1.0 / std::sinh(l / 2.0));
}

double epsilon0() {
    return 2.0 * std::asinh(1.0);
}

} // namespace atlas
