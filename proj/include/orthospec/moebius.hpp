#pragma once

#include <array>
#include <cmath>

#include "orthospec/errors.hpp"

namespace orthospec {

// Tolerances used throughout for matrix hygiene.  Products of up to ~40
// generator matrices lose at most ~1e-12 per entry in double precision,
// so 1e-9 leaves three orders of margin.
inline constexpr double kDetTol = 1e-9;
inline constexpr double kDeltaTol = 1e-9;
inline constexpr double kTraceTol = 1e-12;

struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;  // must stay > 0
};

// Element of PSL2(R): real 2x2 matrix of determinant one, stored with a
// canonical sign so that the first nonzero entry among (a, b, c) is
// positive.  Canonicalization is idempotent and bit-stable.
struct Moebius {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    Moebius() = default;
    Moebius(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        canonicalize();
    }

    static Moebius identity() { return {}; }

    void canonicalize() {
        double lead = a != 0.0 ? a : (b != 0.0 ? b : c);
        if (lead < 0.0) {
            a = -a; b = -b; c = -c; d = -d;
        }
    }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    // Squared Frobenius norm; equals 2*cosh(dist(i, g*i)) for det-one g.
    double norm2() const { return a * a + b * b + c * c + d * d; }

    Moebius inverse() const { return {d, -b, -c, a}; }

    bool is_diagonal(double tol = 1e-8) const {
        double s = std::fabs(a) + std::fabs(d);
        return std::fabs(b) <= tol * s && std::fabs(c) <= tol * s;
    }

    bool is_antidiagonal(double tol = 1e-8) const {
        double s = std::fabs(b) + std::fabs(c);
        return std::fabs(a) <= tol * s && std::fabs(d) <= tol * s;
    }

    UpperHalfPoint apply(const UpperHalfPoint& z) const;

    friend Moebius operator*(const Moebius& g, const Moebius& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }
};

// diag(s, 1/s) as a PSL2 element.
inline Moebius diagonal(double s) { return {s, 0.0, 0.0, 1.0 / s}; }

// Point-pair invariant u(z, w) = |z - w|^2 / (Im z Im w).
double point_pair_u(const UpperHalfPoint& z, const UpperHalfPoint& w);

// d(z, w) = arccosh(1 + u/2).
double hyperbolic_distance(const UpperHalfPoint& z, const UpperHalfPoint& w);

enum class DeltaKind { Identity, Exceptional, Regular };

// delta = 2|ad + bc| together with its classification.  Exceptional
// (abcd < 0) classes correspond to axis crossings, Regular (abcd > 0) to
// disjoint axes at distance arccosh(delta/2).  delta = 2 cannot occur for
// a regular element of a strictly hyperbolic group, so landing within
// kDeltaTol of it is reported as numerical corruption.
struct DeltaClass {
    double delta = 2.0;
    DeltaKind kind = DeltaKind::Identity;
};

DeltaClass delta_invariant(const Moebius& g);

// arccosh(max{2, delta}/2): hyperbolic distance between g*(i R+) and i R+.
double axis_distance(const Moebius& g);

// Unsigned crossing angle in (0, pi/2], from delta = |2 cos theta|.  The
// sign of the angle is not recoverable from delta alone.
double intersection_angle(const Moebius& g);

struct LambdaInvariants {
    double lambda_l = 0.0;  // (1/2) log |ab/cd|
    double lambda_r = 0.0;  // (1/2) log |ac/bd|
    double nu = 0.0;        // |ad|^(1/2) + |bc|^(1/2)
};

LambdaInvariants lambda_invariants(const Moebius& g);

struct Diagonalization {
    Moebius sigma;   // sigma g sigma^{-1} = diag(m, 1/m)
    double m = 1.0;  // > 1; geodesic length is 2 log m
};

// Conjugates a hyperbolic element to diag(m, 1/m), m > 1.  sigma is the
// unique determinant-one map sending the repelling fixed point to 0 and
// the attracting one to infinity with the canonical PSL2 sign.
Diagonalization diagonalize_hyperbolic(const Moebius& g);

}  // namespace orthospec
