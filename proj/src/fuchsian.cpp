#include "orthospec/fuchsian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <thread>
#include <unordered_map>
#include <utility>

namespace orthospec {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Dedup key: canonical-sign entries rounded to 8 decimal digits.
struct MatKey {
    std::array<std::int64_t, 4> v;
    bool operator==(const MatKey&) const = default;
    bool operator<(const MatKey& o) const { return v < o.v; }
};

MatKey mat_key(const Moebius& g) {
    auto r = [](double x) { return static_cast<std::int64_t>(std::llround(x * 1e8)); };
    return {{r(g.a), r(g.b), r(g.c), r(g.d)}};
}

struct MatKeyHash {
    std::size_t operator()(const MatKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t x : k.v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

Moebius rotation(double phi) {
    double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    return {c, s, -s, c};
}

double relation_residual(const Moebius& g) {
    double rp = std::max({std::fabs(g.a - 1.0), std::fabs(g.b), std::fabs(g.c), std::fabs(g.d - 1.0)});
    double rm = std::max({std::fabs(g.a + 1.0), std::fabs(g.b), std::fabs(g.c), std::fabs(g.d + 1.0)});
    return std::min(rp, rm);
}

}  // namespace

FuchsianGroup builtin_bolza() {
    double ch = 1.0 + std::sqrt(2.0);          // cosh of half the translation length
    double sh = std::sqrt(ch * ch - 1.0);
    Moebius A(ch, sh, sh, ch);
    std::vector<std::array<double, 4>> gens;
    for (int k = 0; k < 8; ++k) {
        Moebius r = rotation(k * kPi / 4.0);
        Moebius g = r * A * r.inverse();
        gens.push_back({g.a, g.b, g.c, g.d});
    }
    FuchsianGroup group = make_group(gens, "bolza");
    group.exactness_note = "entries lie in Q(sqrt 2, sqrt(2+2 sqrt 2)); stored as doubles";

    // Octagon side-pairing relation g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3.
    const auto& g = group.generators;
    Moebius rel = g[0] * g[1].inverse() * g[2] * g[3].inverse() *
                  g[0].inverse() * g[1] * g[2].inverse() * g[3];
    if (relation_residual(rel) > 1e-9)
        throw InvariantError("builtin_bolza: side-pairing relation residual too large");
    return group;
}

FuchsianGroup make_group(const std::vector<std::array<double, 4>>& generators,
                         std::string label) {
    if (generators.empty()) throw EmptyGenerators("group needs at least one generator");
    FuchsianGroup group;
    group.label = std::move(label);
    for (const auto& e : generators) {
        Moebius g(e[0], e[1], e[2], e[3]);
        if (std::fabs(g.det() - 1.0) > kDetTol)
            throw BadDeterminant("generator determinant " + std::to_string(g.det()));
        group.generators.push_back(g);
    }
    // Close under inverses; existing inverses are recognized by key.
    std::unordered_map<MatKey, int, MatKeyHash> index;
    for (std::size_t i = 0; i < group.generators.size(); ++i)
        index.emplace(mat_key(group.generators[i]), static_cast<int>(i));
    group.inverse_index.assign(group.generators.size(), -1);
    for (std::size_t i = 0; i < group.generators.size(); ++i) {
        Moebius inv = group.generators[i].inverse();
        auto it = index.find(mat_key(inv));
        if (it == index.end()) {
            group.generators.push_back(inv);
            group.inverse_index.push_back(static_cast<int>(i));
            group.inverse_index[i] = static_cast<int>(group.generators.size() - 1);
            index.emplace(mat_key(inv), group.inverse_index[i]);
        } else {
            group.inverse_index[i] = it->second;
        }
    }
    return group;
}

Moebius evaluate_word(const FuchsianGroup& group, std::span<const int> word) {
    Moebius out;
    int n = static_cast<int>(group.generators.size());
    for (int s : word) {
        int k = std::abs(s);
        if (s == 0 || k > n)
            throw ValidationError("word index " + std::to_string(s) + " out of range");
        const Moebius& g = group.generators[k - 1];
        out = out * (s > 0 ? g : g.inverse());
    }
    return out;
}

namespace {

// One BFS expansion: canonical products frontier x generators with
// squared norm at most prune.  Chunked across threads; the merge order
// (chunk 0, 1, ...) is fixed, so results are thread-count independent.
std::vector<Moebius> expand_level(const std::vector<Moebius>& frontier,
                                  const std::vector<Moebius>& gens, double prune,
                                  int threads) {
    auto work = [&](std::size_t lo, std::size_t hi, std::vector<Moebius>& out) {
        out.reserve((hi - lo) * gens.size());
        for (std::size_t i = lo; i < hi; ++i)
            for (const Moebius& g : gens) {
                Moebius p = frontier[i] * g;
                if (p.norm2() <= prune) out.push_back(p);
            }
    };
    if (threads <= 1 || frontier.size() < 2048) {
        std::vector<Moebius> out;
        work(0, frontier.size(), out);
        return out;
    }
    std::size_t n = frontier.size();
    std::size_t nchunk = static_cast<std::size_t>(threads);
    std::vector<std::vector<Moebius>> parts(nchunk);
    std::vector<std::thread> pool;
    for (std::size_t c = 0; c < nchunk; ++c) {
        std::size_t lo = n * c / nchunk, hi = n * (c + 1) / nchunk;
        pool.emplace_back(work, lo, hi, std::ref(parts[c]));
    }
    for (auto& t : pool) t.join();
    std::vector<Moebius> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

std::vector<Moebius> enumerate_ball(const FuchsianGroup& group, double R,
                                    const EnumerationParams& params) {
    if (!(R >= 2.0)) throw ValidationError("enumerate_ball: R must be at least 2");
    double target = R * (1.0 + params.margin);
    double prune = std::max(R * params.prune_factor, target);

    std::unordered_map<MatKey, Moebius, MatKeyHash> seen;
    std::vector<Moebius> frontier{Moebius::identity()};
    seen.emplace(mat_key(frontier[0]), frontier[0]);

    int idle_levels = 0;
    while (!frontier.empty() && idle_levels < 2) {
        std::vector<Moebius> products =
            expand_level(frontier, group.generators, prune, params.threads);
        frontier.clear();
        bool contributed = false;
        for (const Moebius& p : products) {
            auto [it, inserted] = seen.emplace(mat_key(p), p);
            if (!inserted) continue;
            if (seen.size() > params.budget)
                throw BudgetExceeded("enumerate_ball: stored matrices exceed budget");
            if (p.norm2() < target) contributed = true;
            frontier.push_back(p);
        }
        idle_levels = contributed ? 0 : idle_levels + 1;
    }

    std::vector<Moebius> ball;
    for (const auto& [k, g] : seen)
        if (g.norm2() < R) ball.push_back(g);
    std::sort(ball.begin(), ball.end(),
              [](const Moebius& x, const Moebius& y) { return mat_key(x) < mat_key(y); });
    return ball;
}

std::vector<Moebius> enumerate_ball_checked(const FuchsianGroup& group, double R,
                                            const EnumerationParams& params) {
    std::vector<Moebius> ball = enumerate_ball(group, R, params);
    std::unordered_map<MatKey, char, MatKeyHash> keys;
    for (const Moebius& g : ball) keys.emplace(mat_key(g), 1);
    for (const Moebius& g : ball)
        for (const Moebius& h : group.generators) {
            Moebius p = g * h;
            if (p.norm2() < R && !keys.count(mat_key(p)))
                throw IncompleteEnumeration(
                    "enumerate_ball: closure check failed; raise prune_factor");
        }
    return ball;
}

GeodesicFrame geodesic_frame(const FuchsianGroup& group, std::span<const int> word,
                             const EnumerationParams& params) {
    Moebius gamma = evaluate_word(group, word);
    Diagonalization diag = diagonalize_hyperbolic(gamma);
    GeodesicFrame frame;
    frame.sigma = diag.sigma;
    frame.m = diag.m;
    frame.len_c = 2.0 * std::log(diag.m);

    // Any n-th root of gamma stabilizes the same axis, so it shows up as a
    // diagonal element of displacement len/n inside this ball.
    double R = 2.0 * (std::cosh(frame.len_c) + 1.0);
    FuchsianGroup conj = conjugated_group(group, frame);
    for (const Moebius& e : enumerate_ball_checked(conj, R, params)) {
        if (!e.is_diagonal(1e-8)) continue;
        double disp = std::fabs(2.0 * std::log(std::fabs(e.a)));
        if (disp > 1e-6 && disp < frame.len_c * (1.0 - 1e-9))
            throw NotPrimitive("geodesic word is a proper power; root displacement " +
                               std::to_string(disp));
    }
    frame.primitive_checked = true;
    return frame;
}

FuchsianGroup conjugated_group(const FuchsianGroup& group, const GeodesicFrame& frame) {
    FuchsianGroup out;
    out.label = group.label + "@frame";
    out.inverse_index = group.inverse_index;
    Moebius inv = frame.sigma.inverse();
    out.generators.reserve(group.generators.size());
    for (const Moebius& g : group.generators) out.generators.push_back(frame.sigma * g * inv);
    return out;
}

namespace {

// Integers p with |v| m^p inside [1, edge), allowing boundary fuzz of
// rel_tol on either edge so that ties produce both candidates.
std::vector<int> window_powers(double v, double m, double edge, double rel_tol = 1e-9) {
    double x = -std::log(std::fabs(v)) / std::log(m);
    int base = static_cast<int>(std::ceil(x)) - 2;
    std::vector<int> out;
    for (int p = base; p <= base + 4; ++p) {
        double w = std::fabs(v) * std::pow(m, p);
        if (w >= 1.0 - rel_tol && w < edge * (1.0 + rel_tol)) out.push_back(p);
    }
    return out;
}

DoubleCosetRep finish_rep(Moebius rep) {
    DoubleCosetRep out;
    out.rep = rep;
    try {
        out.cls = delta_invariant(rep);
    } catch (const RejectBoundary& e) {
        throw DegenerateDelta(e.what());
    }
    if (out.cls.kind == DeltaKind::Regular) {
        out.ortholength = std::acosh(out.cls.delta / 2.0);
    } else if (out.cls.kind == DeltaKind::Exceptional) {
        out.angle = std::acos(out.cls.delta / 2.0);
    }
    if (out.cls.kind != DeltaKind::Identity) {
        LambdaInvariants li = lambda_invariants(rep);
        out.lambda_l = li.lambda_l;
        out.lambda_r = li.lambda_r;
        out.nu = li.nu;
    }
    return out;
}

}  // namespace

DoubleCosetRep double_coset_reduce(const GeodesicFrame& frame, const Moebius& g) {
    if (g.is_diagonal(1e-8)) {
        DoubleCosetRep out;
        out.rep = g;
        out.cls = {2.0 * std::fabs(g.a * g.d + g.b * g.c), DeltaKind::Identity};
        return out;
    }
    if (g.is_antidiagonal(1e-8))
        throw DegenerateDelta("double_coset_reduce: antidiagonal element (elliptic)");
    double m = frame.m;

    // D^j g D^k scales a by m^{j+k} =: m^p and b by m^{j-k} =: m^q with
    // p = q (mod 2); p is unique, q unique within the parity class.
    bool have = false;
    MatKey best_key{};
    Moebius best;
    for (int p : window_powers(g.a, m, m)) {
        for (int q : window_powers(g.b, m, m * m)) {
            if ((p - q) % 2 != 0) continue;
            int j = (p + q) / 2, k = (p - q) / 2;
            Moebius rep = diagonal(std::pow(m, j)) * g * diagonal(std::pow(m, k));
            MatKey key = mat_key(rep);
            if (!have || key < best_key) {
                have = true;
                best_key = key;
                best = rep;
            }
        }
    }
    if (!have) throw InvariantError("double_coset_reduce: no canonical window admitted the element");
    return finish_rep(best);
}

namespace {

OrthoSpectrum finalize_spectrum(std::vector<DoubleCosetRep> classes, double X) {
    std::sort(classes.begin(), classes.end(), [](const DoubleCosetRep& a, const DoubleCosetRep& b) {
        if (a.cls.delta != b.cls.delta) return a.cls.delta < b.cls.delta;
        return mat_key(a.rep) < mat_key(b.rep);
    });
    OrthoSpectrum spec;
    spec.cutoff = X;
    spec.classes = std::move(classes);
    for (const DoubleCosetRep& c : spec.classes) {
        if (c.cls.kind == DeltaKind::Exceptional) {
            spec.exceptional.push_back(c.angle);
        } else {
            if (!spec.entries.empty() &&
                std::fabs(spec.entries.back().first - c.cls.delta) <=
                    1e-9 * (2.0 + c.cls.delta)) {
                ++spec.entries.back().second;
            } else {
                spec.entries.emplace_back(c.cls.delta, 1);
            }
        }
    }
    std::sort(spec.exceptional.begin(), spec.exceptional.end());
    return spec;
}

}  // namespace

OrthoSpectrum ortho_spectrum(const FuchsianGroup& group, const GeodesicFrame& frame,
                             double X, const EnumerationParams& params) {
    if (!(X > 2.0)) throw ValidationError("ortho_spectrum: cutoff X must exceed 2");
    double m = frame.m;
    // Canonical representatives with delta < X satisfy |a| < m, |b| < m^2
    // and c^2 + d^2 <= X^2/4 + 1, hence lie in this ball.
    double R = 2.0 * m * m * m * m + X * X / 4.0 + 1.0;
    FuchsianGroup conj = conjugated_group(group, frame);
    std::vector<Moebius> ball = enumerate_ball_checked(conj, R, params);

    std::unordered_map<MatKey, DoubleCosetRep, MatKeyHash> cosets;
    for (const Moebius& e : ball) {
        DoubleCosetRep rep = double_coset_reduce(frame, e);
        if (rep.cls.kind == DeltaKind::Identity) continue;
        if (rep.cls.delta >= X) continue;
        cosets.emplace(mat_key(rep.rep), rep);
    }
    std::vector<DoubleCosetRep> classes;
    classes.reserve(cosets.size());
    for (auto& [k, v] : cosets) classes.push_back(v);
    return finalize_spectrum(std::move(classes), X);
}

std::size_t pi_delta(const OrthoSpectrum& spectrum, double x) {
    if (x > spectrum.cutoff)
        throw BeyondCutoff("pi_delta: x exceeds the spectrum cutoff");
    std::size_t n = 0;
    for (const DoubleCosetRep& c : spectrum.classes)
        if (c.cls.delta < x) ++n;
    return n;
}

PairCosets pair_cosets(const FuchsianGroup& group, const GeodesicFrame& frame,
                       std::span<const int> word2, double X,
                       const EnumerationParams& params) {
    if (!(X > 2.0)) throw ValidationError("pair_cosets: cutoff X must exceed 2");
    // Validates hyperbolicity and primitivity of the second word.
    GeodesicFrame frame2 = geodesic_frame(group, word2, params);

    Moebius gamma2c = frame.sigma * evaluate_word(group, word2) * frame.sigma.inverse();
    Diagonalization d2 = diagonalize_hyperbolic(gamma2c);
    if (std::fabs(d2.m - frame2.m) > 1e-9 * frame2.m)
        throw InvariantError("pair_cosets: dilation mismatch between frames");
    PairCosets out;
    out.tau = d2.sigma.inverse();
    out.m2 = d2.m;
    out.len_c2 = 2.0 * std::log(d2.m);

    double m1 = frame.m, m2 = d2.m;
    // Canonical beta = tau^{-1} gamma has |ab| in [1, m2^2) and |a/b| in
    // [1, m1^2), which bounds |a| < m1 m2 and |b| < m2; c and d are then
    // bounded through delta < X.
    double bd = (X + 2.0) / 4.0;
    double R_beta = m1 * m1 * m2 * m2 + m2 * m2 + m1 * m1 * (bd + 1.0) * (bd + 1.0) + bd * bd;
    double R = out.tau.norm2() * R_beta;
    FuchsianGroup conj = conjugated_group(group, frame);
    std::vector<Moebius> ball = enumerate_ball_checked(conj, R, params);

    Moebius tau_inv = out.tau.inverse();
    std::unordered_map<MatKey, DoubleCosetRep, MatKeyHash> cosets;
    for (const Moebius& e : ball) {
        Moebius beta = tau_inv * e;
        beta.canonicalize();
        if (beta.is_diagonal(1e-8)) continue;  // identity class (C1 == C2 only)
        if (beta.is_antidiagonal(1e-8))
            throw DegenerateDelta("pair_cosets: antidiagonal coset element");
        // Left stabilizer scales ab by m2^{2j}, right scales a/b by m1^{2k}.
        bool have = false;
        MatKey best_key{};
        Moebius best;
        for (int j : window_powers(beta.a * beta.b, m2 * m2, m2 * m2)) {
            for (int k : window_powers(beta.a / beta.b, m1 * m1, m1 * m1)) {
                Moebius rep = diagonal(std::pow(m2, j)) * beta * diagonal(std::pow(m1, k));
                MatKey key = mat_key(rep);
                if (!have || key < best_key) {
                    have = true;
                    best_key = key;
                    best = rep;
                }
            }
        }
        if (!have) throw InvariantError("pair_cosets: no canonical window admitted the element");
        DoubleCosetRep rep = finish_rep(best);
        if (rep.cls.delta >= X) continue;
        cosets.emplace(mat_key(rep.rep), rep);
    }
    std::vector<DoubleCosetRep> classes;
    classes.reserve(cosets.size());
    for (auto& [k, v] : cosets) classes.push_back(v);
    out.spectrum = finalize_spectrum(std::move(classes), X);
    return out;
}

}  // namespace orthospec
