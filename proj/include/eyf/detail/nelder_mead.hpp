#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace eyf::detail {

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Plain Nelder-Mead on an unconstrained vector. The objective must return
// a finite value or a large penalty; NaN is treated as +inf.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0, double initial_step,
                                    int max_iterations, double f_tol)
{
    const std::size_t n = x0.size();
    auto safe_f = [&](const std::vector<double>& x) {
        const double v = f(x);
        return std::isnan(v) ? 1e300 : v;
    };

    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        pts[i + 1][i] += initial_step;
    for (std::size_t i = 0; i <= n; ++i)
        fv[i] = safe_f(pts[i]);

    std::vector<std::size_t> order(n + 1);
    int iter = 0;
    bool converged = false;

    auto sort_order = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    while (iter < max_iterations) {
        sort_order();
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];
        if (fv[worst] - fv[best] <= f_tol * (std::abs(fv[best]) + f_tol)) {
            converged = true;
            break;
        }
        ++iter;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += pts[k][j];
        }
        for (double& c : centroid)
            c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> y(n);
            for (std::size_t j = 0; j < n; ++j)
                y[j] = centroid[j] + t * (pts[worst][j] - centroid[j]);
            return y;
        };

        std::vector<double> xr = blend(-1.0);
        const double fr = safe_f(xr);
        if (fr < fv[best]) {
            std::vector<double> xe = blend(-2.0);
            const double fe = safe_f(xe);
            if (fe < fr) {
                pts[worst] = std::move(xe);
                fv[worst] = fe;
            } else {
                pts[worst] = std::move(xr);
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second]) {
            pts[worst] = std::move(xr);
            fv[worst] = fr;
            continue;
        }
        // Contraction, outside or inside depending on the reflection value.
        const double t = (fr < fv[worst]) ? -0.5 : 0.5;
        std::vector<double> xc = blend(t);
        const double fc = safe_f(xc);
        if (fc < std::min(fr, fv[worst])) {
            pts[worst] = std::move(xc);
            fv[worst] = fc;
            continue;
        }
        // Shrink towards the best vertex.
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == order[0]) continue;
            for (std::size_t j = 0; j < n; ++j)
                pts[k][j] = pts[order[0]][j] + 0.5 * (pts[k][j] - pts[order[0]][j]);
            fv[k] = safe_f(pts[k]);
        }
    }

    sort_order();
    return {pts[order[0]], fv[order[0]], iter, converged};
}

}  // namespace eyf::detail
