#include "orthospec/moebius.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace orthospec {

UpperHalfPoint Moebius::apply(const UpperHalfPoint& z) const {
    // (az+b)/(cz+d) expanded over the real/imaginary parts; the
    // denominator |cz+d|^2 is positive for z in the upper half plane.
    double u = c * z.x + d;
    double v = c * z.y;
    double den = u * u + v * v;
    double nu = a * z.x + b;
    double nv = a * z.y;
    return {(nu * u + nv * v) / den, (nv * u - nu * v) / den};
}

double point_pair_u(const UpperHalfPoint& z, const UpperHalfPoint& w) {
    double dx = z.x - w.x;
    double dy = z.y - w.y;
    return (dx * dx + dy * dy) / (z.y * w.y);
}

double hyperbolic_distance(const UpperHalfPoint& z, const UpperHalfPoint& w) {
    return std::acosh(1.0 + point_pair_u(z, w) / 2.0);
}

DeltaClass delta_invariant(const Moebius& g) {
    double ad = g.a * g.d;
    double bc = g.b * g.c;
    double delta = 2.0 * std::fabs(ad + bc);
    if (ad * bc == 0.0) {
        if (g.is_diagonal() || g.is_antidiagonal())
            return {delta, DeltaKind::Identity};
        // Triangular non-diagonal elements sit exactly on delta = 2; a
        // discrete strictly hyperbolic group cannot contain them.
        throw RejectBoundary("delta_invariant: abcd = 0 but element is not diagonal (delta degenerate)");
    }
    if (std::fabs(delta - 2.0) < kDeltaTol)
        throw RejectBoundary("delta_invariant: delta within tolerance of 2 for a regular element");
    DeltaKind kind = (ad * bc < 0.0) ? DeltaKind::Exceptional : DeltaKind::Regular;
    return {delta, kind};
}

double axis_distance(const Moebius& g) {
    DeltaClass dc = delta_invariant(g);
    if (dc.delta <= 2.0) return 0.0;
    return std::acosh(dc.delta / 2.0);
}

double intersection_angle(const Moebius& g) {
    DeltaClass dc = delta_invariant(g);
    if (dc.kind != DeltaKind::Exceptional)
        throw NotExceptional("intersection_angle: delta >= 2");
    return std::acos(dc.delta / 2.0);
}

LambdaInvariants lambda_invariants(const Moebius& g) {
    double ab = g.a * g.b, cd = g.c * g.d, ac = g.a * g.c, bd = g.b * g.d;
    if (ab * cd == 0.0 || ac * bd == 0.0)
        throw NotRegular("lambda_invariants: abcd = 0");
    LambdaInvariants out;
    out.lambda_l = 0.5 * std::log(std::fabs(ab / cd));
    out.lambda_r = 0.5 * std::log(std::fabs(ac / bd));
    out.nu = std::sqrt(std::fabs(g.a * g.d)) + std::sqrt(std::fabs(g.b * g.c));
    return out;
}

Diagonalization diagonalize_hyperbolic(const Moebius& g) {
    double tr = std::fabs(g.trace());
    if (tr <= 2.0 + kTraceTol)
        throw NotHyperbolic("diagonalize_hyperbolic: |trace| <= 2, tr = " + std::to_string(g.trace()));
    double m = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;

    // Work with the trace-positive representative so the eigenvalue of
    // magnitude m belongs to the attracting fixed point.
    double a = g.a, b = g.b, c = g.c, d = g.d;
    if (a + d < 0.0) { a = -a; b = -b; c = -c; d = -d; }

    Moebius sigma;
    if (c != 0.0) {
        double disc = std::sqrt((a + d) * (a + d) - 4.0);
        double z_att = (a - d + disc) / (2.0 * c);
        double z_rep = (a - d - disc) / (2.0 * c);
        // Attracting fixed point has |g'(z)| = 1/(cz+d)^2 < 1.
        if (std::fabs(c * z_att + d) < 1.0) std::swap(z_att, z_rep);
        // sigma: z_rep -> 0, z_att -> infinity, normalized to det one.
        double det = z_rep - z_att;
        if (det > 0.0) {
            double s = std::sqrt(det);
            sigma = Moebius(1.0 / s, -z_rep / s, 1.0 / s, -z_att / s);
        } else {
            double s = std::sqrt(-det);
            sigma = Moebius(-1.0 / s, z_rep / s, 1.0 / s, -z_att / s);
        }
    } else {
        // Fixed points are infinity and b/(d-a).
        if (std::fabs(a) > 1.0) {
            // attracting at infinity: translate the finite fixed point to 0
            double z_rep = b / (d - a);
            sigma = Moebius(1.0, -z_rep, 0.0, 1.0);
        } else {
            // attracting finite: send it to infinity, infinity to 0
            double z_att = b / (d - a);
            sigma = Moebius(0.0, 1.0, -1.0, z_att);
        }
    }

    // Residual check: sigma g sigma^{-1} must be diag(m, 1/m).
    Moebius diag = sigma * g * sigma.inverse();
    double resid = std::fabs(diag.a - m) + std::fabs(diag.b) + std::fabs(diag.c) +
                   std::fabs(diag.d - 1.0 / m);
    if (resid > 1e-7 * (1.0 + m))
        throw InvariantError("diagonalize_hyperbolic: conjugation residual " + std::to_string(resid));
    return {sigma, m};
}

}  // namespace orthospec
