#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eyf::detail {

// Monotone cubic Hermite interpolation (Fritsch-Carlson slopes). Used on
// (log m, log ccdf) tables, where the data is strictly decreasing; the
// interpolant then preserves that monotonicity, which the quantile root
// search relies on.
class Pchip {
public:
    Pchip() = default;

    Pchip(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y))
    {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw std::invalid_argument("Pchip: need >= 2 nodes with matching values");
        for (std::size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1]))
                throw std::invalid_argument("Pchip: abscissae must be strictly increasing");

        std::vector<double> h(n - 1), delta(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            delta[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        d_.assign(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (delta[i - 1] * delta[i] <= 0.0) {
                d_[i] = 0.0;
            } else {
                // Weighted harmonic mean keeps the interpolant monotone.
                const double w1 = 2.0 * h[i] + h[i - 1];
                const double w2 = h[i] + 2.0 * h[i - 1];
                d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        if (n == 2) {
            d_[0] = d_[1] = delta[0];
        } else {
            d_[0] = endpoint_slope(h[0], h[1], delta[0], delta[1]);
            d_[n - 1] = endpoint_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
        }
    }

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    const std::vector<double>& xs() const { return x_; }
    const std::vector<double>& ys() const { return y_; }

    std::size_t segment(double x) const
    {
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - x_.begin());
        if (i == 0) return 0;
        if (i >= x_.size()) return x_.size() - 2;
        return i - 1;
    }

    double eval(double x) const
    {
        const std::size_t i = segment(x);
        return eval_segment(i, x);
    }

    double eval_segment(std::size_t i, double x) const
    {
        const double h = x_[i + 1] - x_[i];
        const double t = (x - x_[i]) / h;
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
    }

    // Solve eval(x) = target inside segment i with safeguarded Newton.
    // Caller guarantees target lies between the segment endpoint values.
    double invert_segment(std::size_t i, double target) const
    {
        double lo = x_[i], hi = x_[i + 1];
        double ylo = y_[i], yhi = y_[i + 1];
        const bool increasing = yhi > ylo;
        double x = lo + (hi - lo) * ((target - ylo) / (yhi - ylo));
        for (int it = 0; it < 100; ++it) {
            const double v = eval_segment(i, x) - target;
            if ((v > 0.0) == increasing)
                hi = x;
            else
                lo = x;
            const double dv = deriv_segment(i, x);
            double next = (dv != 0.0) ? x - v / dv : 0.5 * (lo + hi);
            if (!(next > lo && next < hi))
                next = 0.5 * (lo + hi);
            if (std::abs(next - x) <= 1e-14 * (std::abs(x) + 1e-300)) {
                x = next;
                break;
            }
            x = next;
        }
        return x;
    }

    double deriv_segment(std::size_t i, double x) const
    {
        const double h = x_[i + 1] - x_[i];
        const double t = (x - x_[i]) / h;
        const double t2 = t * t;
        const double dh00 = 6 * t2 - 6 * t;
        const double dh10 = 3 * t2 - 4 * t + 1;
        const double dh01 = -6 * t2 + 6 * t;
        const double dh11 = 3 * t2 - 2 * t;
        return (dh00 * y_[i] + dh01 * y_[i + 1]) / h + dh10 * d_[i] + dh11 * d_[i + 1];
    }

private:
    static double endpoint_slope(double h0, double h1, double d0, double d1)
    {
        // Non-centered three-point estimate (Moler), clipped for monotonicity.
        double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (d * d0 <= 0.0)
            d = 0.0;
        else if (d0 * d1 <= 0.0 && std::abs(d) > 3.0 * std::abs(d0))
            d = 3.0 * d0;
        return d;
    }

    std::vector<double> x_, y_, d_;
};

}  // namespace eyf::detail
