#pragma once

// Independent reference computations used only by the test suite.  None of
// these share code with the library paths they validate.

#include <functional>
#include <vector>

#include "orthospec/fuchsian.hpp"
#include "orthospec/moebius.hpp"

namespace orthospec::oracle {

// K_0 by the defining ascending series, accurate for z <= 2:
// K_0(z) = -(log(z/2) + gamma) I_0(z) + sum_{k>=1} (z^2/4)^k / (k!)^2 H_k.
double k0_series(double z);

// K_{ir}(z) (scaled by e^z) by plain Simpson integration on a uniform
// grid; slow but entirely independent of the tanh-sinh machinery.
double k_imag_e_simpson(double r, double z);

// Complete elliptic integral by direct quadrature of the defining
// integral on theta in [0, pi/2].
double elliptic_K_quadrature(double k);

// min over (x, y) of u(g*ix, iy) by a log-grid scan plus local refinement.
double min_u_grid(const Moebius& g);

// All distinct group elements of squared norm < R obtained by exhaustive
// word enumeration to the given depth, no pruning.
std::vector<Moebius> ball_by_words(const FuchsianGroup& group, double R, int depth);

// Adaptive Simpson for generic cross-checks.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-11);

}  // namespace orthospec::oracle
