#pragma once

#include "entm/errors.hpp"

#include <cmath>
#include <utility>

namespace entm {

// Bisection on [a,b]; f(a) and f(b) must have opposite signs.
template <typename F>
double bisect_root(F&& f, double a, double b, double xtol = 1e-12, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw NoBracket("bisect_root: endpoints do not bracket a sign change");
    }
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

// Golden-section maximization on [a,b]; returns (argmax, max). Assumes the
// function is unimodal on the bracket; callers validate that when needed.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double xtol = 1e-8) {
    static const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_gr * (b - a);
    double d = a + inv_gr * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_gr * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

}  // namespace entm
