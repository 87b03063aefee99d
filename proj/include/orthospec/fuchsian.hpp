#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orthospec/moebius.hpp"

namespace orthospec {

// Cocompact torsion-free Fuchsian group, given by a generator list closed
// under inverses.  Discreteness and cocompactness are assumptions on the
// input, not verified at construction.
struct FuchsianGroup {
    std::vector<Moebius> generators;
    std::vector<int> inverse_index;  // generators[inverse_index[i]] = generators[i]^{-1}
    std::string label;
    std::string exactness_note;  // documentation only (e.g. "entries exact in Q(sqrt 2)")
};

// Regular-octagon genus-2 surface group: g_k = R(k pi/4) A R(-k pi/4),
// k = 0..7, with A the hyperbolic translation of trace 2(1+sqrt 2) along
// the unit semicircle.  g_{k+4} = g_k^{-1}, and the octagon side-pairing
// relation g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3 = Id is verified to 1e-9
// before the group is returned.
FuchsianGroup builtin_bolza();

// Validates determinants and closes the list under inverses.
FuchsianGroup make_group(const std::vector<std::array<double, 4>>& generators,
                         std::string label);

struct EnumerationParams {
    double margin = 0.25;        // stopping-rule slack on the target norm
    double prune_factor = 16.0;  // frontier elements beyond R*prune_factor are not expanded
    std::size_t budget = 5'000'000;  // max stored matrices
    int threads = 0;                 // 0 = serial
};

// Signed 1-based generator word: +k means generators[k-1], -k its inverse.
Moebius evaluate_word(const FuchsianGroup& group, std::span<const int> word);

// All distinct group elements (up to PSL sign) with squared Frobenius
// norm below R, identity included.  Since |g|^2 = 2 cosh d(i, g i), this
// is the hyperbolic ball of radius arccosh(R/2) around i.
//
// Breadth-first search over words, deduplicating by the canonical-sign
// matrix rounded to 1e-8 per entry.  The frontier is pruned at
// R * prune_factor; word geodesics track hyperbolic geodesics closely
// enough that prefixes of an element in the ball stay within a factor
// e^{diam(X)} in squared norm, so the default factor 16 covers surfaces
// of diameter up to ~2.7.  The BFS stops once two consecutive levels
// contribute nothing below R*(1+margin).  Completeness is guarded by the
// closure check in enumerate_ball_checked.
std::vector<Moebius> enumerate_ball(const FuchsianGroup& group, double R,
                                    const EnumerationParams& params = {});

// enumerate_ball plus the generator-closure check: every product of a
// ball element with a generator that lands inside the ball must already
// be present, else IncompleteEnumeration.
std::vector<Moebius> enumerate_ball_checked(const FuchsianGroup& group, double R,
                                            const EnumerationParams& params = {});

// Conjugating frame for a closed geodesic: sigma gamma_C sigma^{-1} =
// diag(m, 1/m), so the geodesic lifts to i R+ and len(C) = 2 log m.
struct GeodesicFrame {
    Moebius sigma;
    double m = 1.0;
    double len_c = 0.0;
    bool primitive_checked = false;
};

// Builds the frame for the element spelled by `word` and verifies
// primitivity by scanning a ball of radius arccosh(cosh(len) + 1) in the
// conjugated group for a diagonal element of displacement len/n, n >= 2.
GeodesicFrame geodesic_frame(const FuchsianGroup& group, std::span<const int> word,
                             const EnumerationParams& params = {});

// The group conjugated into the frame: sigma Gamma sigma^{-1}.
FuchsianGroup conjugated_group(const FuchsianGroup& group, const GeodesicFrame& frame);

struct DoubleCosetRep {
    Moebius rep;  // canonical: |a| in [1, m), |b| in [1, m^2)
    DeltaClass cls;
    double ortholength = 0.0;  // arccosh(delta/2), Regular only
    double angle = 0.0;        // arccos(delta/2), Exceptional only
    double nu = 0.0;
    double lambda_l = 0.0;
    double lambda_r = 0.0;
};

// Canonical representative of Gamma_0 g Gamma_0 for g in the conjugated
// frame.  The diagonal action scales a by m^p and b by m^q with p = q
// (mod 2); p is pinned by |a| m^p in [1, m) and q by |b| m^q in [1, m^2)
// within its parity class.  Boundary ties (within kDeltaTol of a window
// edge) are broken toward the lexicographically smaller rounded entry
// tuple.
DoubleCosetRep double_coset_reduce(const GeodesicFrame& frame, const Moebius& g);

struct OrthoSpectrum {
    // Non-identity classes sorted by (delta, canonical entries).
    std::vector<DoubleCosetRep> classes;
    // Regular deltas (> 2) grouped into (delta, multiplicity), ascending.
    std::vector<std::pair<double, int>> entries;
    std::vector<double> exceptional;  // crossing angles in (0, pi/2]
    double cutoff = 0.0;
};

// All double cosets with delta < X, from the conjugated-group ball of
// squared norm 2 m^4 + X^2/4 + 1 (canonical representatives of such
// cosets provably lie inside it).
OrthoSpectrum ortho_spectrum(const FuchsianGroup& group, const GeodesicFrame& frame,
                             double X, const EnumerationParams& params = {});

// #{classes with delta < x}, exceptional ones included.
std::size_t pi_delta(const OrthoSpectrum& spectrum, double x);

struct PairCosets {
    OrthoSpectrum spectrum;  // classes of Gamma_2 \ Gamma / Gamma_1 via delta(tau^{-1} gamma)
    Moebius tau;             // tau maps i R+ onto the lift of C_2
    double m2 = 1.0;
    double len_c2 = 0.0;
};

// Double cosets for a pair of geodesics: C_1 from `frame`, C_2 spelled by
// `word2`.  Reduction normalizes |ab| into [1, m2^2) by the C_2
// stabilizer and |a/b| into [1, m1^2) by the C_1 stabilizer.  Exceptional
// classes correspond to intersections of C_1 and C_2.
PairCosets pair_cosets(const FuchsianGroup& group, const GeodesicFrame& frame,
                       std::span<const int> word2, double X,
                       const EnumerationParams& params = {});

}  // namespace orthospec
