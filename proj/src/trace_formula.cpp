#include "orthospec/trace_formula.hpp"

#include <algorithm>
#include <cmath>

#include "orthospec/bessel.hpp"
#include "orthospec/quadrature.hpp"

namespace orthospec {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Kahan-compensated accumulator; summation order is fixed by the callers
// (ascending delta / ascending eigenvalue) so totals are reproducible.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double orbital_integral_exp(double delta, double t) {
    if (!(t > 0.0)) throw ValidationError("orbital_integral_exp: t must be positive");
    if (delta < 0.0 || std::fabs(delta - 2.0) < kDeltaTol)
        throw DegenerateDelta("orbital_integral_exp: delta = " + std::to_string(delta));
    double hi = (delta + 2.0) * t / 2.0;
    double lo = std::fabs(delta - 2.0) * t / 2.0;
    // e^{2t} K_0(hi) K_0(lo) = k0e(hi) k0e(lo) e^{2t - hi - lo}; the
    // exponent is -(delta-2)t for delta > 2 and exactly 0 for delta < 2.
    double expo = 2.0 * t - hi - lo;
    return k0e(hi) * k0e(lo) * std::exp(expo);
}

double orbital_integral_general(double delta, const KernelSpec& kernel) {
    validate_kernel(kernel);
    if (delta < 0.0 || std::fabs(delta - 2.0) < kDeltaTol)
        throw DegenerateDelta("orbital_integral_general: delta = " + std::to_string(delta));
    double rate = kernel_decay_rate(kernel);
    double a = std::max(delta, 2.0);  // lower integration endpoint
    // Truncate where Phi(t-2) has dropped ~1e-19 below its endpoint size,
    // with slack for the logarithmic growth of K near modulus 1.
    double reach = a + (50.0 + std::log1p(a)) / rate;
    double S = std::acosh(reach / a);

    // After t = a cosh s both branches read f(s) ds with f analytic at 0:
    // the substitution absorbs dt/sqrt(t^2 - a^2) = ds against the branch's
    // own inverse square root.
    auto f = [&](double s) {
        double tt = a * std::cosh(s);
        double t2 = tt * tt;
        double mod2, pre;
        if (delta > 2.0) {
            mod2 = (t2 - delta * delta) / (t2 - 4.0);
            pre = delta * std::sinh(s) / std::sqrt(t2 - 4.0);
        } else {
            mod2 = (t2 - 4.0) / (t2 - delta * delta);
            pre = 2.0 * std::sinh(s) / std::sqrt(t2 - delta * delta);
        }
        mod2 = std::clamp(mod2, 0.0, 1.0 - 1e-16);
        return kernel_eval(kernel, tt - 2.0) * pre * elliptic_K(std::sqrt(mod2));
    };
    QuadratureResult q = tanh_sinh(f, 0.0, S, 1e-12);
    if (q.last_change > 1e-6 * (std::fabs(q.value) + 1e-300))
        throw NonConvergent("orbital_integral_general: quadrature did not settle");
    return 2.0 * q.value;
}

double main_term(const KernelSpec& kernel, double len_c) {
    validate_kernel(kernel);
    if (!(len_c > 0.0)) throw ValidationError("main_term: len_c must be positive");
    if (const auto* e = std::get_if<ExponentialKernel>(&kernel)) {
        // 2 len(C) e^{2t} K_0(2t); e^{2t} K_0(2t) is the scaled value.
        return 2.0 * len_c * k0e(2.0 * e->t);
    }
    // 4 log m int_2^inf Phi(x-2)/sqrt(x^2-4) dx = 2 len(C) int_0^inf
    // Phi(2 cosh s - 2) ds.
    double rate = kernel_decay_rate(kernel);
    double S = std::acosh(1.0 + 50.0 / (2.0 * rate));
    auto f = [&](double s) { return kernel_eval(kernel, 2.0 * std::cosh(s) - 2.0); };
    QuadratureResult q = tanh_sinh(f, 0.0, S, 1e-12);
    if (q.last_change > 1e-6 * (std::fabs(q.value) + 1e-300))
        throw NonConvergent("main_term: quadrature did not settle");
    return 2.0 * len_c * q.value;
}

double empirical_count_coefficient(const OrthoSpectrum& spectrum) {
    double coeff = 0.0;
    std::size_t n = 0;
    for (const DoubleCosetRep& c : spectrum.classes) {
        ++n;
        coeff = std::max(coeff, static_cast<double>(n) / (c.cls.delta * c.cls.delta));
    }
    // Safety factor 2, and a floor in case the observed spectrum is empty.
    double floor = (static_cast<double>(spectrum.classes.size()) + 1.0) /
                   (spectrum.cutoff * spectrum.cutoff);
    return 2.0 * std::max(coeff, floor);
}

double truncation_tail_bound(double X, double t, double coeff_a) {
    if (!(X > 2.0) || !(t > 0.0))
        throw ValidationError("truncation_tail_bound: need X > 2 and t > 0");
    // Each omitted class obeys, via K_0(x) <= sqrt(pi/2x) e^{-x}(1 + 1/8x),
    //   I(delta) <= kappa (pi/t) e^{-(delta-2)t} / sqrt(delta^2-4),
    // and the class count below x is at most coeff_a x^2.  Packing the
    // omitted deltas as low as that count allows:
    //   tail <= coeff_a X^2 f(X) + 2 coeff_a int_X^inf x f(x) dx
    // with f(x) = kappa (pi/t) e^{-(x-2)t}/sqrt(x^2-4).
    double kappa = (1.0 + 1.0 / (4.0 * (X - 2.0) * t)) * (1.0 + 1.0 / (4.0 * (X + 2.0) * t));
    double fX = kappa * kPi / t * std::exp(-(X - 2.0) * t) / std::sqrt(X * X - 4.0);
    // int_X^inf x e^{-(x-2)t}/sqrt(x^2-4) dx <= (1-4/X^2)^{-1/2} e^{2t}
    // int_X^inf e^{-xt} (x/...) -> closed form (X t + 1)/t^2 envelope.
    double geom = 1.0 / std::sqrt(1.0 - 4.0 / (X * X));
    double integral = kappa * kPi / t * geom * std::exp(-(X - 2.0) * t) * (X * t + 1.0) / (t * t);
    return coeff_a * (X * X * fX + 2.0 * integral);
}

namespace {

GeometricSideResult sum_classes(const OrthoSpectrum& spectrum, const KernelSpec& kernel,
                                bool include_main, double len_c, double tol) {
    validate_kernel(kernel);
    const auto* e = std::get_if<ExponentialKernel>(&kernel);
    GeometricSideResult out;
    out.cutoff = spectrum.cutoff;
    out.t = e ? e->t : 0.0;

    Kahan exc, reg;
    // classes are already sorted by ascending delta
    for (const DoubleCosetRep& c : spectrum.classes) {
        double term = e ? orbital_integral_exp(c.cls.delta, e->t)
                        : orbital_integral_general(c.cls.delta, kernel);
        if (c.cls.kind == DeltaKind::Exceptional)
            exc.add(term);
        else
            reg.add(term);
    }
    out.exceptional_sum = exc.sum;
    out.regular_sum = reg.sum;
    out.main_term = include_main ? main_term(kernel, len_c) : 0.0;
    out.total = out.main_term + out.exceptional_sum + out.regular_sum;

    double rate = kernel_decay_rate(kernel);
    // Exponential envelope constant: Phi(x) <= envelope * e^{-rate x}.
    double envelope = 1.0;
    if (const auto* tab = std::get_if<TabulatedKernel>(&kernel))
        for (std::size_t i = 0; i < tab->x.size(); ++i)
            envelope = std::max(envelope, tab->phi[i] * std::exp(rate * tab->x[i]));
    out.truncation_bound =
        envelope *
        truncation_tail_bound(spectrum.cutoff, rate, empirical_count_coefficient(spectrum));
    if (tol > 0.0 && out.truncation_bound > tol * std::fabs(out.total))
        throw CutoffInsufficient("geometric side: truncation bound " +
                                 std::to_string(out.truncation_bound) +
                                 " exceeds tolerance");
    return out;
}

}  // namespace

GeometricSideResult geometric_side(const OrthoSpectrum& spectrum, double len_c,
                                   const KernelSpec& kernel, double tol) {
    return sum_classes(spectrum, kernel, true, len_c, tol);
}

GeometricSideResult pairs_geometric_side(const OrthoSpectrum& pair_spectrum, double t,
                                         double tol) {
    return sum_classes(pair_spectrum, ExponentialKernel{t}, false, 1.0, tol);
}

double spectral_side(std::vector<SpectralDatum> data, double t) {
    if (!(t > 0.0)) throw ValidationError("spectral_side: t must be positive");
    std::sort(data.begin(), data.end(), [](const SpectralDatum& a, const SpectralDatum& b) {
        return a.lambda < b.lambda;
    });
    // 2 e^{2t} sqrt(pi/t) K_{ir}(2t) = 2 sqrt(pi/t) * (scaled Bessel at 2t).
    double pref = 2.0 * std::sqrt(kPi / t);
    Kahan acc;
    for (const SpectralDatum& d : data) {
        if (d.lambda < 0.0) throw ValidationError("spectral_side: negative eigenvalue");
        double scaled;
        if (d.lambda >= 0.25) {
            scaled = k_imag_e(std::sqrt(d.lambda - 0.25), 2.0 * t).scaled;
        } else {
            scaled = k_real_e(std::sqrt(0.25 - d.lambda), 2.0 * t);
        }
        acc.add(pref * scaled * d.p);
    }
    return acc.sum;
}

std::complex<double> twisted_main_term(CharacterPair jk, double len_c, double t) {
    if (!(t > 0.0) || !(len_c > 0.0))
        throw ValidationError("twisted_main_term: need t > 0 and len_c > 0");
    int diff = jk.k - jk.j;
    if (diff != 0 && diff % 2 == 0) return {0.0, 0.0};
    double log_m = len_c / 2.0;
    double r = kPi * (jk.j + jk.k) / (2.0 * log_m);
    double scaled = k_imag_e(r, 2.0 * t).scaled;  // e^{2t} K_{ir}(2t)
    if (diff == 0) return {2.0 * len_c * scaled, 0.0};
    // (4 len(C) / (pi i (k-j))) e^{2t} K_{ir}(2t): purely imaginary.
    return {0.0, -4.0 * len_c * scaled / (kPi * diff)};
}

}  // namespace orthospec
