#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace eyf::detail {

// Gauss-Kronrod 7-15 pair. Node/weight constants from the usual QUADPACK
// tables; the embedded Gauss rule supplies the error estimate.
struct Gk15Result {
    double value;
    double error;
};

template <typename F>
Gk15Result gk15(const F& f, double a, double b)
{
    static constexpr std::array<double, 8> xgk = {
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0};
    static constexpr std::array<double, 8> wgk = {
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714};
    static constexpr std::array<double, 4> wg = {
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327};

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double kronrod = wgk[7] * fc;
    double gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * xgk[j];
        const double sum = f(c - x) + f(c + x);
        kronrod += wgk[j] * sum;
        if (j % 2 == 1)
            gauss += wg[j / 2] * sum;
    }
    kronrod *= h;
    gauss *= h;
    return {kronrod, std::abs(kronrod - gauss)};
}

// Adaptive bisection around gk15 with an absolute tolerance budget.
template <typename F>
double adaptive_gk(const F& f, double a, double b, double abs_tol, int depth = 0)
{
    const auto r = gk15(f, a, b);
    if (r.error <= abs_tol || depth >= 28)
        return r.value;
    const double c = 0.5 * (a + b);
    return adaptive_gk(f, a, c, 0.5 * abs_tol, depth + 1)
         + adaptive_gk(f, c, b, 0.5 * abs_tol, depth + 1);
}

// Integrate f over [a, b] with panels that are equally spaced in log(m).
// Assumes 0 < a < b. rel_tol controls the adaptive refinement against a
// first coarse pass.
template <typename F>
double integrate_log_panels(const F& f, double a, double b, double rel_tol,
                            double panels_per_decade = 2.0)
{
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument("integrate_log_panels: need 0 < a < b");
    const double decades = std::log10(b / a);
    const int n = std::max(1, static_cast<int>(std::ceil(decades * panels_per_decade)));

    double coarse = 0.0;
    const double step = std::log(b / a) / n;
    for (int i = 0; i < n; ++i) {
        const double lo = a * std::exp(i * step);
        const double hi = (i + 1 == n) ? b : a * std::exp((i + 1) * step);
        coarse += gk15(f, lo, hi).value;
    }
    const double abs_tol = std::max(rel_tol * std::abs(coarse), 1e-300);

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lo = a * std::exp(i * step);
        const double hi = (i + 1 == n) ? b : a * std::exp((i + 1) * step);
        total += adaptive_gk(f, lo, hi, abs_tol / n);
    }
    return total;
}

}  // namespace eyf::detail
