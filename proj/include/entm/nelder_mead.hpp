#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace entm {

struct NelderMeadOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double initial_spread = 0.1;  // additive perturbation per coordinate
    double ftol = 1e-10;          // stop when f(worst) - f(best) < ftol
    int max_iterations = 20000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    double spread = 0.0;  // final function-value spread
    bool converged = false;
};

// Downhill simplex minimization (Lagarias variant). The vertex sum is kept
// incrementally so an iteration costs O(n), with a periodic refresh against
// floating-point drift.
template <typename F>
NelderMeadResult nelder_mead(F&& f, const std::vector<double>& x0,
                             const NelderMeadOptions& opt = {}) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += opt.initial_spread;
    }
    std::vector<double> fx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fx[i] = f(simplex[i]);
    }
    std::vector<double> vertex_sum(n, 0.0);
    auto refresh_sum = [&]() {
        std::fill(vertex_sum.begin(), vertex_sum.end(), 0.0);
        for (const auto& v : simplex) {
            for (std::size_t k = 0; k < n; ++k) {
                vertex_sum[k] += v[k];
            }
        }
    };
    refresh_sum();

    auto replace_vertex = [&](std::size_t idx, std::vector<double>& xnew, double fnew) {
        for (std::size_t k = 0; k < n; ++k) {
            vertex_sum[k] += xnew[k] - simplex[idx][k];
        }
        simplex[idx].swap(xnew);
        fx[idx] = fnew;
    };

    std::vector<double> centroid(n), xr(n), xx(n);

    NelderMeadResult res;
    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        if (iter % 512 == 511) {
            refresh_sum();
        }
        std::size_t best = 0, worst = 0, second = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (fx[i] < fx[best]) best = i;
            if (fx[i] > fx[worst]) worst = i;
        }
        second = (worst == 0) ? 1 : 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i != worst && fx[i] > fx[second]) second = i;
        }

        res.spread = fx[worst] - fx[best];
        if (res.spread < opt.ftol) {
            res.converged = true;
            break;
        }

        const double inv_n = 1.0 / static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) {
            centroid[k] = (vertex_sum[k] - simplex[worst][k]) * inv_n;
        }
        for (std::size_t k = 0; k < n; ++k) {
            xr[k] = centroid[k] + opt.reflection * (centroid[k] - simplex[worst][k]);
        }
        const double fr = f(xr);

        if (fr < fx[best]) {
            for (std::size_t k = 0; k < n; ++k) {
                xx[k] = centroid[k] + opt.expansion * (xr[k] - centroid[k]);
            }
            const double fe = f(xx);
            if (fe < fr) {
                replace_vertex(worst, xx, fe);
            } else {
                replace_vertex(worst, xr, fr);
            }
        } else if (fr < fx[second]) {
            replace_vertex(worst, xr, fr);
        } else {
            bool shrink = false;
            if (fr < fx[worst]) {
                // outside contraction
                for (std::size_t k = 0; k < n; ++k) {
                    xx[k] = centroid[k] + opt.contraction * (xr[k] - centroid[k]);
                }
                const double fc = f(xx);
                if (fc <= fr) {
                    replace_vertex(worst, xx, fc);
                } else {
                    shrink = true;
                }
            } else {
                // inside contraction
                for (std::size_t k = 0; k < n; ++k) {
                    xx[k] = centroid[k] - opt.contraction * (centroid[k] - simplex[worst][k]);
                }
                const double fc = f(xx);
                if (fc < fx[worst]) {
                    replace_vertex(worst, xx, fc);
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        simplex[i][k] = simplex[best][k] +
                                        opt.shrink * (simplex[i][k] - simplex[best][k]);
                    }
                    fx[i] = f(simplex[i]);
                }
                refresh_sum();
            }
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
    res.x = simplex[best];
    res.value = fx[best];
    res.iterations = iter;
    return res;
}

}  // namespace entm
