#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "orthospec/spectra.hpp"

using namespace orthospec;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

const FuchsianGroup& bolza() {
    static FuchsianGroup g = builtin_bolza();
    return g;
}

const GeodesicFrame& systole_frame() {
    static GeodesicFrame f = geodesic_frame(bolza(), std::vector<int>{1});
    return f;
}

}  // namespace

TEST_CASE("synthetic spectrum partial sums telescope exactly") {
    double vol = 4.0 * kPi, len = 3.05714;
    SyntheticSpectrum s = synthetic_spectrum(vol, len, 2000.0);
    REQUIRE_FALSE(s.entries.empty());
    double sum = 0.0;
    std::size_t j = 0;
    for (const SpectralDatum& d : s.entries) {
        ++j;
        sum += d.p;
        // N(lambda_j) = j exactly on the grid
        CHECK(d.lambda == doctest::Approx(4.0 * kPi * j / vol).epsilon(1e-14));
        double expect = len / kPi * std::sqrt(d.lambda);
        CHECK(std::fabs(sum - expect) <= 1e-9 * expect);
    }
}

TEST_CASE("laplace limit on the synthetic spectrum") {
    double vol = 4.0 * kPi;
    double len = systole_frame().len_c;
    SyntheticSpectrum s = synthetic_spectrum(vol, len, 1e6);
    std::vector<double> ladder{1e2, 1e3, 1e4};
    std::vector<LadderRow> rows = laplace_limit_check(s.entries, ladder, len);
    REQUIRE(rows.size() == 3);
    // monotone approach and a 5% landing at z = 1e4
    CHECK(std::fabs(rows[1].rel_gap) <= std::fabs(rows[0].rel_gap));
    CHECK(std::fabs(rows[2].rel_gap) <= std::fabs(rows[1].rel_gap));
    CHECK(std::fabs(rows[2].rel_gap) < 0.05);
    CHECK(rows[2].target == doctest::Approx(0.5 * len));
}

TEST_CASE("laplace limit degenerate inputs") {
    std::vector<double> ladder{10.0, 100.0};
    CHECK(laplace_limit_check({}, ladder, 2.0)[0].value == 0.0);
    // single lambda = 0 datum: sqrt(pi/2z) e^{1/8z} -> 0
    std::vector<SpectralDatum> one{{0.0, 1.0}};
    std::vector<LadderRow> rows = laplace_limit_check(one, ladder, 2.0);
    CHECK(rows[0].value ==
          doctest::Approx(std::sqrt(kPi / 20.0) * std::exp(1.0 / 80.0)).epsilon(1e-13));
    CHECK(rows[1].value < rows[0].value);
}

TEST_CASE("jittered synthetic spectrum stays close to the law") {
    double vol = 4.0 * kPi, len = 2.0;
    SyntheticSpectrum s = synthetic_spectrum_jittered(vol, len, 1e5, 42);
    std::vector<double> ladder{1e3};
    CHECK(std::fabs(laplace_limit_check(s.entries, ladder, len)[0].rel_gap) < 0.1);
    // determinism of the seeded variant
    SyntheticSpectrum s2 = synthetic_spectrum_jittered(vol, len, 1e5, 42);
    CHECK(s.entries[17].lambda == s2.entries[17].lambda);
}

TEST_CASE("moment sums scale with the Weyl exponents") {
    double vol = 4.0 * kPi, len = 2.0;
    SyntheticSpectrum s = synthetic_spectrum(vol, len, 2e5);

    // alpha = 0 counts eigenvalues in range
    double n = moment_sum(s.entries, 0.0, 10.0, 100.0);
    std::size_t direct = 0;
    for (const SpectralDatum& d : s.entries) {
        if (d.lambda < 0.25) continue;
        double r = std::sqrt(d.lambda - 0.25);
        if (r >= 10.0 && r <= 100.0) ++direct;
    }
    CHECK(n == doctest::Approx(static_cast<double>(direct)));

    // alpha = 3/2 over [z^{1/2}, z^{14/25}]: ratio to z^{(alpha+2) 14/25} bounded
    double prev_ratio = 0.0;
    for (double z : {1e3, 1e4}) {
        double sum = moment_sum(s.entries, 1.5, std::sqrt(z), std::pow(z, 0.56));
        double ratio = sum / std::pow(z, 3.5 * 0.56);
        CHECK(ratio > 0.01);
        CHECK(ratio < 10.0);
        if (prev_ratio > 0.0) CHECK(ratio / prev_ratio < 3.0);
        prev_ratio = ratio;
    }

    // alpha = -31/2 over [z^{14/25}, z]: dominated by the smallest r
    double z = 400.0;
    double r_lo = std::pow(z, 0.56);
    double sum = moment_sum(s.entries, -15.5, r_lo, z);
    double first = 0.0;
    for (const SpectralDatum& d : s.entries) {
        if (d.lambda < 0.25) continue;
        double r = std::sqrt(d.lambda - 0.25);
        if (r >= r_lo) {
            first = std::pow(r, -15.5);
            break;
        }
    }
    CHECK(sum < 1e4 * first);  // the tail beyond the first bucket is negligible

    CHECK_THROWS_AS(moment_sum(s.entries, -2.0, 10.0, 100.0), AlphaForbidden);
    CHECK_THROWS_AS(moment_sum(s.entries, 1.0, 1.0, 100.0), ValidationError);
}

TEST_CASE("small-t table reports certified bounds") {
    OrthoSpectrum spec = ortho_spectrum(bolza(), systole_frame(), 60.0);
    std::vector<double> ladder{0.8, 0.6, 0.4};
    std::vector<LadderRow> rows =
        small_t_asymptotic(spec, systole_frame().len_c, 4.0 * kPi, ladder);
    REQUIRE(rows.size() == 3);
    double target = systole_frame().len_c * systole_frame().len_c * kPi * std::sqrt(2.0) /
                    (4.0 * kPi);
    for (const LadderRow& r : rows) {
        CHECK(r.target == doctest::Approx(target));
        CHECK(r.value > 0.0);
        CHECK(r.bound >= 0.0);
        CHECK(r.bound < 0.05 * r.value);  // cutoff 60 certifies t >= 0.4
    }
    // the cutoff cannot certify much smaller t
    std::vector<double> too_small{0.02};
    CHECK_THROWS_AS(
        small_t_asymptotic(spec, systole_frame().len_c, 4.0 * kPi, too_small, 1e-3),
        CutoffInsufficient);
}

TEST_CASE("count bounds report") {
    OrthoSpectrum spec = ortho_spectrum(bolza(), systole_frame(), 120.0);
    std::vector<CountRow> rows = count_bounds_report(spec);
    REQUIRE(rows.size() >= 4);
    // pi_delta(x)/x^2 decreasing over the top decade, sampled on a coarse
    // ladder (pointwise the ratio jumps up at every new class)
    double top = spec.cutoff;
    double prev = 1e300;
    for (int k = 6; k >= 0; --k) {
        double x = top * std::pow(10.0, -k / 6.0);
        double ratio = static_cast<double>(pi_delta(spec, x)) / (x * x);
        CHECK(ratio <= prev + 1e-15);
        prev = ratio;
    }
    OrthoSpectrum empty;
    empty.cutoff = 10.0;
    CHECK(count_bounds_report(empty).empty());
}

TEST_CASE("kloosterman sums") {
    OrthoSpectrum spec = ortho_spectrum(bolza(), systole_frame(), 200.0);
    double len = systole_frame().len_c;
    double nu_max = (std::sqrt(202.0) + std::sqrt(198.0)) / 2.0;

    // unit phases count classes exactly
    for (double x : {3.0, 6.0, 10.0, nu_max - 0.01}) {
        std::complex<double> s = kloosterman_sum(spec, {0, 0, len, len}, x);
        std::size_t direct = 0;
        for (const DoubleCosetRep& c : spec.classes)
            if (c.nu <= x) ++direct;
        CHECK(s.real() == doctest::Approx(static_cast<double>(direct)));
        CHECK(s.imag() == 0.0);
        // triangle inequality against twisted sums
        for (int mm : {1, 3})
            CHECK(std::abs(kloosterman_sum(spec, {mm, -mm, len, len}, x)) <=
                  s.real() + 1e-9);
    }
    CHECK_THROWS_AS(kloosterman_sum(spec, {0, 0, len, len}, nu_max + 1.0), BeyondCutoff);

    // cumulative count vs x^2: slope against len^2/(pi vol) within 30%
    // over the top available range
    double slope_target = len * len / (kPi * 4.0 * kPi);
    double x_top = nu_max - 0.01;
    double count_top = kloosterman_sum(spec, {0, 0, len, len}, x_top).real();
    CHECK(count_top / (x_top * x_top) / slope_target > 0.7);
    CHECK(count_top / (x_top * x_top) / slope_target < 1.3);
}

TEST_CASE("basmajian partial sums for disjoint simple systoles") {
    OrthoSpectrum self_spec = ortho_spectrum(bolza(), systole_frame(), 30.0);
    PairCosets pair = pair_cosets(bolza(), systole_frame(), std::vector<int>{3, 6}, 30.0);
    BasmajianResult res = basmajian_check(pair, self_spec, systole_frame().len_c);
    CHECK(res.bound == doctest::Approx(2.0 * systole_frame().len_c));
    REQUIRE_FALSE(res.partial_sums.empty());
    double prev = 0.0;
    for (double s : res.partial_sums) {
        CHECK(s > prev);  // increments are positive
        prev = s;
    }
    CHECK(res.partial_sum == doctest::Approx(res.partial_sums.back()));
    CHECK(res.partial_sum <= res.bound + 1e-9);

    // each term two ways: from delta directly and through the length
    for (const DoubleCosetRep& c : pair.spectrum.classes) {
        double len = std::acosh(c.cls.delta / 2.0);
        double via_len = std::log(1.0 / std::tanh(len / 2.0));
        double via_delta = 0.5 * std::log((c.cls.delta + 2.0) / (c.cls.delta - 2.0));
        CHECK(via_len == doctest::Approx(via_delta).epsilon(1e-12));
    }
}

TEST_CASE("basmajian with a tiny cutoff is trivially one-sided") {
    PairCosets pair = pair_cosets(bolza(), systole_frame(), std::vector<int>{3, 6}, 3.0);
    OrthoSpectrum self_spec = ortho_spectrum(bolza(), systole_frame(), 3.0);
    BasmajianResult res = basmajian_check(pair, self_spec, systole_frame().len_c);
    CHECK(res.partial_sum == 0.0);
    CHECK(res.partial_sum <= res.bound);
}

TEST_CASE("basmajian rejects crossing and non-simple configurations") {
    OrthoSpectrum self_spec = ortho_spectrum(bolza(), systole_frame(), 25.0);
    PairCosets crossing = pair_cosets(bolza(), systole_frame(), std::vector<int>{3}, 25.0);
    CHECK_THROWS_AS(basmajian_check(crossing, self_spec, systole_frame().len_c),
                    NotDisjoint);

    // a non-simple C1: its own spectrum carries exceptional classes
    GeodesicFrame f8 = geodesic_frame(bolza(), std::vector<int>{1, 2, -3});
    OrthoSpectrum not_simple = ortho_spectrum(bolza(), f8, 25.0);
    REQUIRE_FALSE(not_simple.exceptional.empty());
    PairCosets disjoint = pair_cosets(bolza(), systole_frame(), std::vector<int>{3, 6}, 25.0);
    CHECK_THROWS_AS(basmajian_check(disjoint, not_simple, f8.len_c), NotSimple);
}

TEST_CASE("next-order coefficient on a non-simple geodesic") {
    // value sqrt(t/pi)/len -> 1 with first correction
    // (sum over crossings of 1/sqrt(4-delta^2)) pi/t
    GeodesicFrame f8 = geodesic_frame(bolza(), std::vector<int>{1, 2, -3});
    OrthoSpectrum spec = ortho_spectrum(bolza(), f8, 25.0);
    REQUIRE(spec.exceptional.size() == 3);
    double coeff = 0.0;
    for (double angle : spec.exceptional) {
        double delta = 2.0 * std::cos(angle);
        coeff += 1.0 / std::sqrt(4.0 - delta * delta);
    }
    double t = 50.0;
    GeometricSideResult gs = geometric_side(spec, f8.len_c, ExponentialKernel{t});
    double fitted = (gs.total - f8.len_c * std::sqrt(kPi / t)) * t / kPi;
    CHECK(fitted == doctest::Approx(coeff).epsilon(0.10));
}
