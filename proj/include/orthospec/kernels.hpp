#pragma once

#include <variant>
#include <vector>

#include "orthospec/errors.hpp"

namespace orthospec {

// Test-function kernels Phi for the trace formula.  Phi must be
// nonnegative and rapidly decaying.

struct ExponentialKernel {
    double t = 1.0;  // Phi(x) = e^{-t x}, t > 0
};

// Sampled decreasing kernel.  Values are interpolated log-linearly (exact
// for exponentials) and extended past the last sample by
// phi_last * e^{-tail_rate (x - x_last)}.  tail_rate > 0 is the decay
// bound; without it tail integrals cannot be truncated.
struct TabulatedKernel {
    std::vector<double> x;    // ascending, x.front() == 0
    std::vector<double> phi;  // positive
    double tail_rate = 0.0;
};

using KernelSpec = std::variant<ExponentialKernel, TabulatedKernel>;

void validate_kernel(const KernelSpec& kernel);

double kernel_eval(const KernelSpec& kernel, double x);

// Effective exponential decay rate, used to place truncation points.
double kernel_decay_rate(const KernelSpec& kernel);

// Selberg transform chain Phi -> Q -> g -> h:
//   Q(x) = int_x^inf Phi(t)/sqrt(t - x) dt   (computed as 2 int_0^inf Phi(x+s^2) ds)
//   g(u) = Q(2 cosh u - 2)
//   h(r) = int_R g(u) e^{iru} du
// For the exponential kernel h has the closed form
// 2 e^{2t} sqrt(pi/t) K_{ir}(2t); tabulated kernels run the numeric chain.
double selberg_q(const KernelSpec& kernel, double x);
double selberg_g(const KernelSpec& kernel, double u);
double selberg_transform(const KernelSpec& kernel, double r);

}  // namespace orthospec
