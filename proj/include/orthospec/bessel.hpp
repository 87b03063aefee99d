#pragma once

#include "orthospec/errors.hpp"

namespace orthospec {

// Modified Bessel functions of the second kind, evaluated by
// double-exponential quadrature of the cosh integral representations.
// "Scaled" variants return e^z K(z), which stays representable for all z;
// plain values underflow past z ~ 700 and are flagged.

struct BesselEval {
    double value = 0.0;      // K(z); 0 when underflowed
    double log_value = 0.0;  // log K(z), always valid
    bool underflow = false;
    bool accuracy_loss = false;
};

// e^z K_0(z), z > 0.
double k0e(double z);

// K_0(z); underflow flag set (and value 0) for z > 700.
BesselEval k0(double z);

// e^z K_nu(z) for real order 0 <= nu <= 1/2.
double k_real_e(double nu, double z);

BesselEval k_real_order(double nu, double z);

struct ImagBessel {
    double scaled = 0.0;  // e^z K_{ir}(z)
    bool accuracy_loss = false;
};

// e^z K_{ir}(z) = int_0^inf e^{-z(cosh u - 1)} cos(ru) du.  The grid
// resolves at least 20 nodes per oscillation period 2*pi/r.  When the
// oscillatory cancellation eats more than ~10 digits the accuracy_loss
// flag is set and the caller should fall back to decay_bound.
ImagBessel k_imag_e(double r, double z);

BesselEval k_imag_order(double r, double z);

enum class BesselRegion {
    Quadrature,         // r < 4
    UniformAsymptotic,  // 4 <= r <= z, below the rapid-decay belt
    RapidDecay,         // z^{14/25} <= r <= z
    Superexponential,   // r > z
};

BesselRegion classify_region(double r, double z);

struct BesselRegime {
    BesselRegion tag = BesselRegion::Quadrature;
    // Bound on |e^z K_{ir}(z) - scaled|, i.e. in scaled units.
    double error_estimate = 0.0;
};

struct UniformKResult {
    double value = 0.0;   // K_{ir}(z) estimate; underflows for large z
    double scaled = 0.0;  // e^z * value
    BesselRegime regime;
};

// sqrt(pi/2z) e^{-(z + r^2/2z)} [1 + (r^2 - z)/(8 z^2)] for 4 <= r <= z,
// with the calibrated error estimate C*(1/sqrt z)(r/z^{3/2} +
// sqrt(r/z) e^{-z/r}) in scaled units.
UniformKResult uniform_asymptotic(double r, double z);

// Upper bound on |K_{ir}(z)|: C2 e^{-z} z^{15/2} / r^16 on the belt
// z^{14/25} <= r <= z, C3 r e^{-pi r/2} for r > z.
double decay_bound(double r, double z);
double decay_bound_scaled(double r, double z);  // e^z * bound

// Calibrated constants: empirical max ratio against quadrature on a
// validation grid (r up to 128, z up to 1e5), times a safety factor >= 2.
// The belt constant is large because the z^{15/2}/r^16 envelope is very
// loose at the lower edge r = z^{14/25}; it tightens rapidly in r.
inline constexpr double kUniformErrC = 0.15;   // observed max 0.072
inline constexpr double kDecayBeltC2 = 4.0e6;  // observed max 1.78e6
inline constexpr double kDecaySuperC3 = 1.2;   // observed max 0.58

// Complete elliptic integral of the first kind K(k), 0 <= k < 1, by the
// arithmetic-geometric mean.
double elliptic_K(double k);

}  // namespace orthospec
