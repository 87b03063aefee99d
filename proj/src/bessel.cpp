#include "orthospec/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "orthospec/quadrature.hpp"

namespace orthospec {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Truncation point U with e^{-z(cosh U - 1)} * growth < 1e-19 relative:
// z(cosh U - 1) = budget covers integrands growing at most like cosh(u/2).
double truncation_point(double z, double budget) {
    return std::acosh(1.0 + budget / z);
}

// z(cosh u - 1) without cancellation for small u.
inline double zcoshm1(double z, double u) {
    double s = std::sinh(0.5 * u);
    return 2.0 * z * s * s;
}

}  // namespace

double k0e(double z) {
    if (!(z > 0.0)) throw ValidationError("k0e: z must be positive");
    double U = truncation_point(z, 46.0);
    auto f = [z](double u) { return std::exp(-zcoshm1(z, u)); };
    // Non-oscillatory; cap the coarse step only through U via max_h = 1.
    return tanh_sinh(f, 0.0, U, 1e-13).value;
}

BesselEval k0(double z) {
    double scaled = k0e(z);
    BesselEval out;
    out.log_value = std::log(scaled) - z;
    out.underflow = z > 700.0;
    out.value = out.underflow ? 0.0 : scaled * std::exp(-z);
    return out;
}

double k_real_e(double nu, double z) {
    if (!(z > 0.0)) throw ValidationError("k_real_e: z must be positive");
    if (nu < 0.0 || nu > 0.5)
        throw ValidationError("k_real_e: order must lie in [0, 1/2]");
    // cosh(nu u) <= cosh(u/2) grows slower than the budget margin.
    double U = truncation_point(z, 50.0);
    auto f = [z, nu](double u) { return std::exp(-zcoshm1(z, u)) * std::cosh(nu * u); };
    return tanh_sinh(f, 0.0, U, 1e-13).value;
}

BesselEval k_real_order(double nu, double z) {
    double scaled = k_real_e(nu, z);
    BesselEval out;
    out.log_value = std::log(scaled) - z;
    out.underflow = z > 700.0;
    out.value = out.underflow ? 0.0 : scaled * std::exp(-z);
    return out;
}

ImagBessel k_imag_e(double r, double z) {
    if (!(z > 0.0)) throw ValidationError("k_imag_e: z must be positive");
    if (r < 0.0) r = -r;  // K_{ir} is even in r
    double U = truncation_point(z, 46.0);
    auto f = [z, r](double u) { return std::exp(-zcoshm1(z, u)) * std::cos(r * u); };
    // >= 20 nodes per oscillation period 2*pi/r, and never coarser than
    // U/40.  Central tanh-sinh spacing is (U/2)(pi/2) h.
    double du = U / 40.0;
    if (r > 0.0) du = std::min(du, 2.0 * kPi / (20.0 * r));
    double max_h = 4.0 * du / (kPi * U);
    // Refinement floor just above the per-level roundoff of the envelope
    // integral; changes below it are noise, and values that small are
    // flagged as cancellation losses regardless.
    double floor = 4e-16 * std::min(U, std::sqrt(2.0 * kPi / z));
    QuadratureResult q = tanh_sinh(f, 0.0, U, 1e-12, max_h, 14, floor);

    ImagBessel out;
    out.scaled = q.value;
    // Cancellation budget: compare against the all-positive envelope.
    double envelope = k0e(z);
    double eps = std::numeric_limits<double>::epsilon();
    out.accuracy_loss = std::fabs(q.value) < 1e6 * eps * envelope;
    return out;
}

BesselEval k_imag_order(double r, double z) {
    ImagBessel s = k_imag_e(r, z);
    BesselEval out;
    out.accuracy_loss = s.accuracy_loss;
    out.underflow = z > 700.0;
    out.log_value = std::log(std::fabs(s.scaled)) - z;  // log |K_{ir}|
    out.value = out.underflow ? 0.0 : s.scaled * std::exp(-z);
    return out;
}

BesselRegion classify_region(double r, double z) {
    if (r > z) return BesselRegion::Superexponential;
    if (r >= std::pow(z, 14.0 / 25.0)) return BesselRegion::RapidDecay;
    if (r >= 4.0) return BesselRegion::UniformAsymptotic;
    return BesselRegion::Quadrature;
}

UniformKResult uniform_asymptotic(double r, double z) {
    if (!(r >= 4.0 && r <= z))
        throw OutOfRegion("uniform_asymptotic: requires 4 <= r <= z");
    UniformKResult out;
    double corr = 1.0 + (r * r - z) / (8.0 * z * z);
    out.scaled = std::sqrt(kPi / (2.0 * z)) * std::exp(-r * r / (2.0 * z)) * corr;
    out.value = z > 700.0 ? 0.0 : out.scaled * std::exp(-z);
    out.regime.tag = BesselRegion::UniformAsymptotic;
    out.regime.error_estimate =
        kUniformErrC / std::sqrt(z) *
        (r / (z * std::sqrt(z)) + std::sqrt(r / z) * std::exp(-z / r));
    return out;
}

double decay_bound_scaled(double r, double z) {
    if (!(z > 0.0)) throw ValidationError("decay_bound: z must be positive");
    if (r > z) {
        // e^z * C3 r e^{-pi r/2}; exponent stays negative since r > z.
        return kDecaySuperC3 * r * std::exp(z - 0.5 * kPi * r);
    }
    if (r >= std::pow(z, 14.0 / 25.0)) {
        return kDecayBeltC2 * std::pow(z, 7.5) / std::pow(r, 16.0);
    }
    throw OutOfRegion("decay_bound: requires r >= z^{14/25}");
}

double decay_bound(double r, double z) {
    return decay_bound_scaled(r, z) * std::exp(-z);
}

double elliptic_K(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw ModulusOutOfRange("elliptic_K: modulus must lie in [0, 1), got " + std::to_string(k));
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 64 && std::fabs(a - b) > 1e-17 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2.0 * a);
}

}  // namespace orthospec
