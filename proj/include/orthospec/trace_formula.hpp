#pragma once

#include <complex>
#include <span>
#include <vector>

#include "orthospec/fuchsian.hpp"
#include "orthospec/kernels.hpp"

namespace orthospec {

// One spectral datum: Laplace eigenvalue and squared geodesic period.
// r = sqrt(lambda - 1/4) for lambda >= 1/4; below that the Bessel order
// becomes the real eps = sqrt(1/4 - lambda) in (0, 1/2].
struct SpectralDatum {
    double lambda = 0.0;
    double p = 0.0;
};

// Character exponents: chi_1(x) = x^{pi i j / log m}, chi_2 likewise.
struct CharacterPair {
    int j = 0;
    int k = 0;
};

struct GeometricSideResult {
    double main_term = 0.0;
    double exceptional_sum = 0.0;
    double regular_sum = 0.0;
    double total = 0.0;
    double truncation_bound = 0.0;  // certified bound on the omitted tail
    double cutoff = 0.0;
    double t = 0.0;  // kernel parameter when Exponential, else 0
};

// Orbital integral of a general kernel over one double coset, in the
// separated elliptic-integral form:
//   delta > 2:  2 int_delta^inf Phi(t-2)/sqrt(t^2-4)   K(sqrt((t^2-d^2)/(t^2-4)))   dt
//   delta < 2:  2 int_2^inf     Phi(t-2)/sqrt(t^2-d^2) K(sqrt((t^2-4)/(t^2-d^2)))   dt
// The substitution t = max(delta,2) cosh s makes the integrand analytic at
// the lower endpoint.
double orbital_integral_general(double delta, const KernelSpec& kernel);

// Exponential-kernel form of the same quantity:
//   e^{2t} K_0((delta+2)t/2) K_0(|delta-2|t/2),
// evaluated through scaled Bessel values so nothing over- or underflows
// until e^{-(delta-2)t} itself does.
double orbital_integral_exp(double delta, double t);

// Identity-coset term: 4 log m int_2^inf Phi(x-2)/sqrt(x^2-4) dx; for the
// exponential kernel this is 2 len(C) e^{2t} K_0(2t).
double main_term(const KernelSpec& kernel, double len_c);

// Sums main + exceptional + regular over all classes of the spectrum.
// The truncation bound covers the omitted classes (delta >= cutoff) via
// the empirical quadratic count coefficient and the K_0 upper bound
// K_0(x) <= sqrt(pi/2x) e^{-x} (1 + 1/(8x)); see truncation_tail_bound.
// Throws CutoffInsufficient when the bound exceeds tol * |total|.
GeometricSideResult geometric_side(const OrthoSpectrum& spectrum, double len_c,
                                   const KernelSpec& kernel, double tol = 0.0);

// Certified bound on sum of exponential-kernel orbital terms over classes
// with delta >= X, assuming at most coeff_a * x^2 classes below any x.
double truncation_tail_bound(double X, double t, double coeff_a);

// Empirical quadratic counting coefficient: 2 * max_n n / delta_n^2.
double empirical_count_coefficient(const OrthoSpectrum& spectrum);

// Spectral side 2 e^{2t} sqrt(pi/t) sum K_{ir_n}(2t) p_n, ordered by
// ascending eigenvalue with compensated summation.  Eigenvalues below 1/4
// use the real-order Bessel K_eps.
double spectral_side(std::vector<SpectralDatum> data, double t);

// Twisted identity-coset term for the character pair (j, k):
//   j = k:        2 len(C) e^{2t} K_{i pi (j+k)/(2 log m)}(2t)
//   k - j odd:    (4 len(C)/(pi i (k-j))) e^{2t} K_{i pi (j+k)/(2 log m)}(2t)
//   k - j even,!=0: 0
std::complex<double> twisted_main_term(CharacterPair jk, double len_c, double t);

// Geometric side for a pair of distinct geodesics: no identity coset, all
// classes summed with the exponential product form.
GeometricSideResult pairs_geometric_side(const OrthoSpectrum& pair_spectrum, double t,
                                         double tol = 0.0);

}  // namespace orthospec
