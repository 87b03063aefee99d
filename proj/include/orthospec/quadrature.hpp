#pragma once

#include <cmath>

namespace orthospec {

struct QuadratureResult {
    double value = 0.0;
    double last_change = 0.0;  // |I_h - I_{h/2}| at the final refinement
    int levels = 0;
};

// Tanh-sinh (double-exponential) quadrature on a finite interval.
//
// Nodes are x = mid + half*tanh((pi/2) sinh w) on the trapezoid grid
// w = k*h; h is halved (reusing previous nodes) until the value moves by
// less than rel_tol or max_level is reached.  max_h caps the coarsest
// step: for oscillatory integrands pass max_h small enough that the
// central node spacing half*(pi/2)*h resolves the oscillation.
// abs_floor stops the refinement once changes drop below an absolute
// scale; cancellation-dominated integrals (value far below the integrand
// envelope) can never meet a purely relative target.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-12,
                           double max_h = 1.0, int max_level = 14,
                           double abs_floor = 0.0) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double pi_2 = 1.5707963267948966;

    auto node = [&](double w, double& contrib) {
        // contrib = weight * f(x(w)); returns false once the transform
        // has saturated (x indistinguishable from an endpoint).
        double t = pi_2 * std::sinh(w);
        double x = mid + half * std::tanh(t);
        if (x <= a || x >= b) return false;
        double ch = std::cosh(t);
        double weight = pi_2 * std::cosh(w) / (ch * ch);
        contrib = weight * f(x);
        return true;
    };

    // Raw trapezoid sum over w = k*h, restricted to odd k when refining.
    auto grid_sum = [&](double h, bool odd_only) {
        double s = 0.0;
        double c;
        if (!odd_only && node(0.0, c)) s += c;
        for (int sign = -1; sign <= 1; sign += 2) {
            for (long k = 1; ; k += odd_only ? 2 : 1) {
                if (!node(sign * k * h, c)) break;
                s += c;
            }
        }
        return s;
    };

    double h = max_h > 1.0 ? 1.0 : max_h;
    double sum = grid_sum(h, false);
    QuadratureResult out;
    out.value = half * h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += grid_sum(h, true);
        double value = half * h * sum;
        out.last_change = std::fabs(value - out.value);
        out.value = value;
        out.levels = level;
        if (level >= 2 &&
            out.last_change <= rel_tol * std::fabs(value) + abs_floor + 1e-300)
            break;
    }
    return out;
}

}  // namespace orthospec
