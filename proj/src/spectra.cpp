#include "orthospec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace orthospec {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

SyntheticSpectrum synthetic_spectrum(double vol_x, double len_c, double lambda_max) {
    if (!(vol_x > 0.0) || !(len_c > 0.0) || !(lambda_max > 0.0))
        throw ValidationError("synthetic_spectrum: vol_x, len_c, lambda_max must be positive");
    SyntheticSpectrum out;
    out.vol_x = vol_x;
    out.len_c = len_c;
    out.model = "weyl-grid";
    double gap = 4.0 * kPi / vol_x;
    std::size_t count = static_cast<std::size_t>(lambda_max / gap);
    out.entries.reserve(count);
    double prev_sqrt = 0.0;
    for (std::size_t j = 1; j <= count; ++j) {
        double lambda = gap * static_cast<double>(j);
        double s = std::sqrt(lambda);
        out.entries.push_back({lambda, len_c / kPi * (s - prev_sqrt)});
        prev_sqrt = s;
    }
    return out;
}

SyntheticSpectrum synthetic_spectrum_jittered(double vol_x, double len_c,
                                              double lambda_max, std::uint64_t seed) {
    SyntheticSpectrum out = synthetic_spectrum(vol_x, len_c, lambda_max);
    out.model = "weyl-grid-jittered";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    double gap = 4.0 * kPi / vol_x;
    double prev_sqrt = 0.0;
    for (std::size_t j = 0; j < out.entries.size(); ++j) {
        double lambda = out.entries[j].lambda + gap * u(rng);
        if (lambda <= 0.0) lambda = out.entries[j].lambda;
        double s = std::sqrt(lambda);
        out.entries[j] = {lambda, len_c / kPi * (s - prev_sqrt)};
        prev_sqrt = s;
    }
    return out;
}

std::vector<LadderRow> laplace_limit_check(const std::vector<SpectralDatum>& data,
                                           std::span<const double> z_ladder,
                                           double len_c) {
    std::vector<SpectralDatum> sorted(data);
    std::sort(sorted.begin(), sorted.end(),
              [](const SpectralDatum& a, const SpectralDatum& b) { return a.lambda < b.lambda; });
    std::vector<LadderRow> rows;
    rows.reserve(z_ladder.size());
    double target = 0.5 * len_c;
    for (double z : z_ladder) {
        if (!(z > 0.0)) throw ValidationError("laplace_limit_check: z must be positive");
        double sum = 0.0, comp = 0.0;
        for (const SpectralDatum& d : sorted) {
            // r^2 = lambda - 1/4, kept exact also below 1/4.
            double term = std::exp(-(d.lambda - 0.25) / (2.0 * z)) * d.p;
            double y = term - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        double value = std::sqrt(kPi / (2.0 * z)) * sum;
        rows.push_back({z, value, target, target != 0.0 ? value / target - 1.0 : 0.0, 0.0});
    }
    return rows;
}

double moment_sum(const std::vector<SpectralDatum>& data, double alpha, double r_lo,
                  double r_hi) {
    if (alpha == -2.0) throw AlphaForbidden("moment_sum: alpha = -2 is excluded");
    if (!(r_lo >= 4.0) || !(r_hi > r_lo))
        throw ValidationError("moment_sum: need 4 <= r_lo < r_hi");
    double sum = 0.0;
    for (const SpectralDatum& d : data) {
        if (d.lambda < 0.25) continue;
        double r = std::sqrt(d.lambda - 0.25);
        if (r >= r_lo && r <= r_hi) sum += std::pow(r, alpha);
    }
    return sum;
}

std::vector<LadderRow> small_t_asymptotic(const OrthoSpectrum& spectrum, double len_c,
                                          double vol_x, std::span<const double> t_ladder,
                                          double tol) {
    if (!(vol_x > 0.0)) throw ValidationError("small_t_asymptotic: vol_x must be positive");
    double target = len_c * len_c * kPi * std::sqrt(2.0) / vol_x;
    std::vector<LadderRow> rows;
    rows.reserve(t_ladder.size());
    for (double t : t_ladder) {
        GeometricSideResult gs = geometric_side(spectrum, len_c, ExponentialKernel{t}, tol);
        double value = t * gs.total;
        rows.push_back({t, value, target, value / target - 1.0, t * gs.truncation_bound});
    }
    return rows;
}

std::vector<CountRow> count_bounds_report(const OrthoSpectrum& spectrum) {
    std::vector<CountRow> rows;
    std::size_t n = 0;
    for (const DoubleCosetRep& c : spectrum.classes) {
        ++n;
        double x = c.cls.delta;
        if (!rows.empty() && rows.back().x == x) {
            rows.back().count = n;
        } else {
            rows.push_back({x, n, 0.0, 0.0, 0.0});
        }
    }
    for (CountRow& r : rows) {
        double cnt = static_cast<double>(r.count);
        r.per_x = cnt / r.x;
        r.per_x2 = cnt / (r.x * r.x);
        r.log_weighted = r.x > 1.0 ? cnt * std::log(r.x) / r.x : 0.0;
    }
    return rows;
}

std::complex<double> kloosterman_sum(const OrthoSpectrum& spectrum,
                                     const KloostermanQuery& query, double x) {
    if (!(query.len_c1 > 0.0) || !(query.len_c2 > 0.0))
        throw ValidationError("kloosterman_sum: geodesic lengths must be positive");
    // nu is monotone in delta; the delta cutoff certifies a nu cutoff.
    double X = spectrum.cutoff;
    double nu_cutoff = (std::sqrt(X + 2.0) + std::sqrt(X - 2.0)) / 2.0;
    if (x > nu_cutoff)
        throw BeyondCutoff("kloosterman_sum: nu threshold exceeds the enumerated range");
    std::complex<double> sum{0.0, 0.0};
    for (const DoubleCosetRep& c : spectrum.classes) {
        if (c.nu > x) continue;
        double phase = 2.0 * kPi * (query.m * c.lambda_l / query.len_c1 +
                                    query.n * c.lambda_r / query.len_c2);
        sum += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return sum;
}

BasmajianResult basmajian_check(const PairCosets& pair, const OrthoSpectrum& c1_self,
                                double len_c1) {
    if (!pair.spectrum.exceptional.empty())
        throw NotDisjoint("basmajian_check: the geodesics intersect");
    if (!c1_self.exceptional.empty())
        throw NotSimple("basmajian_check: C1 has self-intersections");
    BasmajianResult out;
    out.bound = 2.0 * len_c1;
    for (const DoubleCosetRep& c : pair.spectrum.classes) {
        // log coth(len/2) = (1/2) log((delta+2)/(delta-2))
        double term = 0.5 * std::log((c.cls.delta + 2.0) / (c.cls.delta - 2.0));
        out.partial_sum += term;
        out.partial_sums.push_back(out.partial_sum);
    }
    return out;
}

}  // namespace orthospec
