#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orthospec/trace_formula.hpp"

namespace orthospec {

// Deterministic stand-in for true spectral data: eigenvalues placed so the
// Weyl count N(lambda_j) = j holds exactly (lambda_j = 4 pi j / vol), with
// periods chosen to telescope the partial-sum law
// sum_{lambda <= x} p_j = (len(C)/pi) sqrt(x) exactly at grid points.
struct SyntheticSpectrum {
    std::vector<SpectralDatum> entries;
    std::string model;
    double vol_x = 0.0;
    double len_c = 0.0;
};

SyntheticSpectrum synthetic_spectrum(double vol_x, double len_c, double lambda_max);

// Seeded variant with jittered eigenvalue positions, for robustness tests
// only; the period telescoping is preserved against the jittered grid.
SyntheticSpectrum synthetic_spectrum_jittered(double vol_x, double len_c,
                                              double lambda_max, std::uint64_t seed);

struct LadderRow {
    double parameter = 0.0;  // z or t
    double value = 0.0;
    double target = 0.0;
    double rel_gap = 0.0;
    double bound = 0.0;  // certified truncation bound where applicable
};

// Gaussian-weighted period sums sqrt(pi/2z) sum e^{-r_j^2/2z} p_j against
// the limit len(C)/2.  r_j^2 = lambda_j - 1/4 is carried exactly, so
// eigenvalues below 1/4 contribute their e^{+eps^2/2z} factors.
std::vector<LadderRow> laplace_limit_check(const std::vector<SpectralDatum>& data,
                                           std::span<const double> z_ladder,
                                           double len_c);

// sum r_j^alpha over r_j in [r_lo, r_hi]; alpha = -2 is the excluded
// logarithmic case.
double moment_sum(const std::vector<SpectralDatum>& data, double alpha, double r_lo,
                  double r_hi);

// t * geometric_side(t) against the reported small-t target
// len(C)^2 pi sqrt(2) / vol(X), with certified truncation at each t.
std::vector<LadderRow> small_t_asymptotic(const OrthoSpectrum& spectrum, double len_c,
                                          double vol_x, std::span<const double> t_ladder,
                                          double tol = 0.0);

struct CountRow {
    double x = 0.0;
    std::size_t count = 0;    // pi_delta(x)
    double per_x = 0.0;       // pi_delta(x)/x
    double per_x2 = 0.0;      // pi_delta(x)/x^2
    double log_weighted = 0.0;  // pi_delta(x) log(x)/x
};

// Empirical counting curves sampled at the class deltas.
std::vector<CountRow> count_bounds_report(const OrthoSpectrum& spectrum);

struct KloostermanQuery {
    int m = 0;
    int n = 0;
    double len_c1 = 0.0;
    double len_c2 = 0.0;
};

// Cumulative generalized Kloosterman sum
//   S(x) = sum_{nu(gamma) <= x} e(m Lambda_l/len(C1) + n Lambda_r/len(C2)),
// over the classes of a (pair) spectrum; m = n = 0 degenerates to the
// counting function.
std::complex<double> kloosterman_sum(const OrthoSpectrum& spectrum,
                                     const KloostermanQuery& query, double x);

struct BasmajianResult {
    double partial_sum = 0.0;  // sum log coth(len/2) over enumerated classes
    double bound = 0.0;        // 2 len(C1)
    std::vector<double> partial_sums;  // running prefix sums, ascending delta
};

// One-sided check of the orthogeodesic identity for disjoint simple
// geodesics.  NotDisjoint if the pair spectrum has exceptional classes;
// NotSimple if the self spectrum of C1 does.
BasmajianResult basmajian_check(const PairCosets& pair, const OrthoSpectrum& c1_self,
                                double len_c1);

}  // namespace orthospec
