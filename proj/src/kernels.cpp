#include "orthospec/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "orthospec/bessel.hpp"
#include "orthospec/quadrature.hpp"

namespace orthospec {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void validate_kernel(const KernelSpec& kernel) {
    if (const auto* e = std::get_if<ExponentialKernel>(&kernel)) {
        if (!(e->t > 0.0)) throw ValidationError("ExponentialKernel: t must be positive");
        return;
    }
    const auto& tab = std::get<TabulatedKernel>(kernel);
    if (tab.x.size() < 2 || tab.x.size() != tab.phi.size())
        throw ValidationError("TabulatedKernel: need matching sample arrays of size >= 2");
    if (tab.x.front() != 0.0)
        throw ValidationError("TabulatedKernel: samples must start at x = 0");
    if (!std::is_sorted(tab.x.begin(), tab.x.end()))
        throw ValidationError("TabulatedKernel: sample points must be ascending");
    for (double v : tab.phi)
        if (!(v > 0.0)) throw ValidationError("TabulatedKernel: samples must be positive");
    if (!(tab.tail_rate > 0.0))
        throw DecayTooSlow("TabulatedKernel: tail_rate must be positive");
}

double kernel_eval(const KernelSpec& kernel, double x) {
    if (x < 0.0) x = 0.0;
    if (const auto* e = std::get_if<ExponentialKernel>(&kernel))
        return std::exp(-e->t * x);
    const auto& tab = std::get<TabulatedKernel>(kernel);
    if (x >= tab.x.back())
        return tab.phi.back() * std::exp(-tab.tail_rate * (x - tab.x.back()));
    auto it = std::upper_bound(tab.x.begin(), tab.x.end(), x);
    std::size_t i = static_cast<std::size_t>(it - tab.x.begin());
    if (i == 0) return tab.phi.front();
    double x0 = tab.x[i - 1], x1 = tab.x[i];
    double f = (x - x0) / (x1 - x0);
    return std::exp((1.0 - f) * std::log(tab.phi[i - 1]) + f * std::log(tab.phi[i]));
}

double kernel_decay_rate(const KernelSpec& kernel) {
    if (const auto* e = std::get_if<ExponentialKernel>(&kernel)) return e->t;
    return std::get<TabulatedKernel>(kernel).tail_rate;
}

double selberg_q(const KernelSpec& kernel, double x) {
    if (const auto* e = std::get_if<ExponentialKernel>(&kernel))
        return std::exp(-e->t * x) * std::sqrt(kPi / e->t);
    // Substituting t = x + s^2 removes the inverse-sqrt singularity:
    // Q(x) = 2 int_0^inf Phi(x + s^2) ds.
    const auto& tab = std::get<TabulatedKernel>(kernel);
    double reach = tab.x.back() + 45.0 / tab.tail_rate;
    double S = std::sqrt(std::max(reach - x, 1.0));
    auto f = [&](double s) { return kernel_eval(kernel, x + s * s); };
    return 2.0 * tanh_sinh(f, 0.0, S, 1e-12).value;
}

double selberg_g(const KernelSpec& kernel, double u) {
    return selberg_q(kernel, 2.0 * std::cosh(u) - 2.0);
}

double selberg_transform(const KernelSpec& kernel, double r) {
    validate_kernel(kernel);
    if (const auto* e = std::get_if<ExponentialKernel>(&kernel)) {
        // h(r) = 2 e^{2t} sqrt(pi/t) K_{ir}(2t); e^{2t} K_{ir}(2t) is the
        // scaled Bessel value, so no overflow for large t.
        return 2.0 * std::sqrt(kPi / e->t) * k_imag_e(r, 2.0 * e->t).scaled;
    }
    const auto& tab = std::get<TabulatedKernel>(kernel);
    // g(u) decays like Phi(2 cosh u - 2); truncate where the tail bound
    // drops below 1e-19 of g(0).
    double reach = tab.x.back() + 45.0 / tab.tail_rate;
    double U = std::acosh(1.0 + reach / 2.0);
    auto f = [&](double u) { return selberg_g(kernel, u) * std::cos(r * u); };
    double du = U / 40.0;
    if (r > 0.0) du = std::min(du, 2.0 * kPi / (20.0 * std::fabs(r)));
    double max_h = 4.0 * du / (kPi * U);
    return 2.0 * tanh_sinh(f, 0.0, U, 1e-10, max_h, 10).value;
}

}  // namespace orthospec
