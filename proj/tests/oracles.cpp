#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace orthospec::oracle {

double k0_series(double z) {
    const double gamma0 = 0.57721566490153286060651209008240243;
    double q = z * z / 4.0;
    double i0 = 1.0, term = 1.0;
    double sum = 0.0, hk = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (k * k);
        i0 += term;
        hk += 1.0 / k;
        sum += term * hk;
    }
    return -(std::log(z / 2.0) + gamma0) * i0 + sum;
}

double k_imag_e_simpson(double r, double z) {
    double U = std::acosh(1.0 + 46.0 / z);
    // Uniform Simpson with at least 40 points per oscillation period.
    double du = U / 2000.0;
    if (r > 0.0) du = std::min(du, 2.0 * 3.141592653589793 / (40.0 * r));
    long n = static_cast<long>(U / du) + 1;
    if (n % 2 == 1) ++n;
    double h = U / static_cast<double>(n);
    auto f = [&](double u) {
        double s = std::sinh(0.5 * u);
        return std::exp(-2.0 * z * s * s) * std::cos(r * u);
    };
    double sum = f(0.0) + f(U);
    for (long k = 1; k < n; ++k) sum += f(k * h) * (k % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

double elliptic_K_quadrature(double k) {
    double k2 = k * k;
    auto f = [&](double th) {
        double s = std::sin(th);
        return 1.0 / std::sqrt(1.0 - k2 * s * s);
    };
    return integrate(f, 0.0, 1.5707963267948966, 1e-13);
}

double min_u_grid(const Moebius& g) {
    auto u = [&](double lx, double ly) {
        double x = std::exp(lx), y = std::exp(ly);
        return g.a * g.a * x / y + g.b * g.b / (x * y) + g.c * g.c * x * y +
               g.d * g.d * y / x - 2.0;
    };
    double best = 1e300, bx = 0.0, by = 0.0;
    for (int i = -120; i <= 120; ++i)
        for (int j = -120; j <= 120; ++j) {
            double v = u(i * 0.1, j * 0.1);
            if (v < best) {
                best = v;
                bx = i * 0.1;
                by = j * 0.1;
            }
        }
    double step = 0.05;
    for (int round = 0; round < 40; ++round) {
        bool moved = false;
        for (int di = -1; di <= 1; ++di)
            for (int dj = -1; dj <= 1; ++dj) {
                double v = u(bx + di * step, by + dj * step);
                if (v < best) {
                    best = v;
                    bx += di * step;
                    by += dj * step;
                    moved = true;
                }
            }
        if (!moved) step *= 0.5;
    }
    return best;
}

std::vector<Moebius> ball_by_words(const FuchsianGroup& group, double R, int depth) {
    struct Key {
        long long v[4];
        bool operator==(const Key&) const = default;
    };
    struct Hash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 0;
            for (long long x : k.v) h = h * 1000003u ^ std::hash<long long>{}(x);
            return h;
        }
    };
    auto key = [](const Moebius& g) {
        auto r = [](double x) { return std::llround(x * 1e8); };
        return Key{{r(g.a), r(g.b), r(g.c), r(g.d)}};
    };
    std::unordered_set<Key, Hash> seen;
    std::vector<Moebius> frontier{Moebius::identity()}, out;
    seen.insert(key(frontier[0]));
    out.push_back(frontier[0]);
    for (int level = 0; level < depth; ++level) {
        std::vector<Moebius> next;
        for (const Moebius& g : frontier)
            for (const Moebius& h : group.generators) {
                Moebius p = g * h;
                if (seen.insert(key(p)).second) {
                    next.push_back(p);
                    if (p.norm2() < R) out.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    std::vector<Moebius> ball;
    for (const Moebius& g : out)
        if (g.norm2() < R) ball.push_back(g);
    return ball;
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole,
            int depth) -> double {
        double mid = 0.5 * (lo + hi);
        double lm = f(0.5 * (lo + mid)), rm = f(0.5 * (mid + hi));
        double left = (mid - lo) / 6.0 * (flo + 4.0 * lm + fmid);
        double right = (hi - mid) / 6.0 * (fmid + 4.0 * rm + fhi);
        if (depth > 48 || std::fabs(left + right - whole) < 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
        return rec(lo, mid, flo, lm, fmid, left, depth + 1) +
               rec(mid, hi, fmid, rm, fhi, right, depth + 1);
    };
    double mid = 0.5 * (a + b);
    double fa = f(a), fm = f(mid), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return rec(a, b, fa, fm, fb, whole, 0);
}

}  // namespace orthospec::oracle
