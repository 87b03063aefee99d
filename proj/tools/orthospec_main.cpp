// orthospec: command-line driver for the relative trace formula toolkit.
//
// Every subcommand reads one JSON config (--config), writes a deterministic
// CSV document (stdout and, when given, --out), and logs timing to stderr.
// Exit codes: 0 success, 2 config/validation error, 3 numerical failure,
// 4 internal invariant violation.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orthospec/bessel.hpp"
#include "orthospec/config.hpp"
#include "orthospec/spectra.hpp"
#include "orthospec/version.hpp"

namespace {

using namespace orthospec;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Doc {
    std::string text;
    void meta(const std::string& line) { text += "# " + line + "\n"; }
    void row(const std::string& line) { text += line + "\n"; }
};

Doc begin_doc(const std::string& command, const GroupConfig& cfg) {
    Doc doc;
    doc.meta(std::string("orthospec ") + kVersion + " " + command);
    doc.meta("config " + cfg.echo);
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int env_threads_override() {
    const char* env = std::getenv("ORTHOSPEC_THREADS");
    if (!env || !*env) return -1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0)
        throw ConfigError("ORTHOSPEC_THREADS must be a positive integer");
    return static_cast<int>(v);
}

double require(const std::optional<double>& v, const char* name) {
    if (!v) throw ConfigError(std::string("config: missing required params.") + name);
    return *v;
}

GeodesicFrame require_frame(const FuchsianGroup& group, const GroupConfig& cfg,
                            const EnumerationParams& params) {
    if (cfg.geodesic_word.empty())
        throw ConfigError("config: this command needs geodesic.word");
    return geodesic_frame(group, cfg.geodesic_word, params);
}

std::vector<double> ladder_or_single(const std::vector<double>& ladder,
                                     const std::optional<double>& single,
                                     const char* what) {
    if (!ladder.empty()) return ladder;
    if (single) return {*single};
    throw ConfigError(std::string("config: need params.") + what + " or its ladder");
}

const char* kind_name(DeltaKind k) {
    switch (k) {
        case DeltaKind::Identity: return "identity";
        case DeltaKind::Exceptional: return "exceptional";
        default: return "regular";
    }
}

void emit_spectrum_rows(Doc& doc, const OrthoSpectrum& spec) {
    doc.row("delta,kind,ortholength_or_angle,nu,lambda_l,lambda_r,multiplicity");
    auto multiplicity = [&](const DoubleCosetRep& c) {
        if (c.cls.kind != DeltaKind::Exceptional) {
            for (const auto& [d, m] : spec.entries)
                if (std::fabs(d - c.cls.delta) <= 1e-9 * (2.0 + c.cls.delta)) return m;
            return 1;
        }
        int m = 0;
        for (const DoubleCosetRep& o : spec.classes)
            if (o.cls.kind == DeltaKind::Exceptional &&
                std::fabs(o.cls.delta - c.cls.delta) <= 1e-9 * (2.0 + c.cls.delta))
                ++m;
        return m;
    };
    for (const DoubleCosetRep& c : spec.classes) {
        bool exc = c.cls.kind == DeltaKind::Exceptional;
        double len_or_angle = exc ? c.angle : c.ortholength;
        doc.row(fmt(c.cls.delta) + "," + kind_name(c.cls.kind) + "," + fmt(len_or_angle) +
                "," + fmt(c.nu) + "," + fmt(c.lambda_l) + "," + fmt(c.lambda_r) + "," +
                std::to_string(multiplicity(c)));
    }
}

std::vector<SpectralDatum> spectral_input(const GroupConfig& cfg) {
    if (cfg.spectral_csv) return read_spectral_csv(*cfg.spectral_csv);
    if (cfg.vol_x && cfg.len_c && cfg.lambda_max)
        return synthetic_spectrum(*cfg.vol_x, *cfg.len_c, *cfg.lambda_max).entries;
    throw ConfigError("config: need params.spectral_csv or volX/lenC/lambda_max");
}

Doc run_command(const std::string& command, const GroupConfig& cfg) {
    EnumerationParams params = enumeration_params(cfg);
    Doc doc = begin_doc(command, cfg);

    if (command == "ortho-spectrum") {
        FuchsianGroup group = load_group(cfg);
        GeodesicFrame frame = require_frame(group, cfg, params);
        OrthoSpectrum spec =
            ortho_spectrum(group, frame, require(cfg.cutoff_x, "cutoff_X"), params);
        doc.meta("lenC " + fmt(frame.len_c));
        emit_spectrum_rows(doc, spec);
    } else if (command == "pair-spectrum") {
        FuchsianGroup group = load_group(cfg);
        GeodesicFrame frame = require_frame(group, cfg, params);
        if (cfg.geodesic2_word.empty())
            throw ConfigError("config: pair-spectrum needs geodesic2.word");
        PairCosets pair = pair_cosets(group, frame, cfg.geodesic2_word,
                                      require(cfg.cutoff_x, "cutoff_X"), params);
        doc.meta("lenC1 " + fmt(frame.len_c) + " lenC2 " + fmt(pair.len_c2));
        doc.meta("tau " + fmt(pair.tau.a) + " " + fmt(pair.tau.b) + " " + fmt(pair.tau.c) +
                 " " + fmt(pair.tau.d));
        emit_spectrum_rows(doc, pair.spectrum);
    } else if (command == "geom-side") {
        FuchsianGroup group = load_group(cfg);
        GeodesicFrame frame = require_frame(group, cfg, params);
        OrthoSpectrum spec =
            ortho_spectrum(group, frame, require(cfg.cutoff_x, "cutoff_X"), params);
        doc.row("t,main_term,exceptional_sum,regular_sum,total,truncation_bound");
        for (double t : ladder_or_single(cfg.t_ladder, cfg.t, "t")) {
            GeometricSideResult gs =
                geometric_side(spec, frame.len_c, ExponentialKernel{t}, cfg.tolerance);
            doc.row(fmt(t) + "," + fmt(gs.main_term) + "," + fmt(gs.exceptional_sum) + "," +
                    fmt(gs.regular_sum) + "," + fmt(gs.total) + "," +
                    fmt(gs.truncation_bound));
        }
    } else if (command == "spectral-side") {
        std::vector<SpectralDatum> data = spectral_input(cfg);
        doc.row("t,value");
        for (double t : ladder_or_single(cfg.t_ladder, cfg.t, "t"))
            doc.row(fmt(t) + "," + fmt(spectral_side(data, t)));
    } else if (command == "limit-check") {
        std::vector<SpectralDatum> data = spectral_input(cfg);
        if (!cfg.len_c) throw ConfigError("config: limit-check needs params.lenC");
        // z_ladder is the canonical spelling; t_ladder is accepted too
        std::vector<double> ladder = cfg.z_ladder.empty() ? cfg.t_ladder : cfg.z_ladder;
        if (ladder.empty()) throw ConfigError("config: limit-check needs params.z_ladder");
        doc.row("z,value,target,rel_gap");
        for (const LadderRow& r : laplace_limit_check(data, ladder, *cfg.len_c))
            doc.row(fmt(r.parameter) + "," + fmt(r.value) + "," + fmt(r.target) + "," +
                    fmt(r.rel_gap));
    } else if (command == "small-t") {
        FuchsianGroup group = load_group(cfg);
        GeodesicFrame frame = require_frame(group, cfg, params);
        OrthoSpectrum spec =
            ortho_spectrum(group, frame, require(cfg.cutoff_x, "cutoff_X"), params);
        if (cfg.t_ladder.empty()) throw ConfigError("config: small-t needs params.t_ladder");
        double vol = require(cfg.vol_x, "volX");
        doc.row("t,t_times_total,target,rel_gap,truncation_bound");
        for (const LadderRow& r :
             small_t_asymptotic(spec, frame.len_c, vol, cfg.t_ladder, cfg.tolerance))
            doc.row(fmt(r.parameter) + "," + fmt(r.value) + "," + fmt(r.target) + "," +
                    fmt(r.rel_gap) + "," + fmt(r.bound));
    } else if (command == "bessel") {
        double r = require(cfg.r, "r");
        double z = require(cfg.z, "z");
        BesselEval e = r == 0.0 ? k0(z) : k_imag_order(r, z);
        doc.row("r,z,value,log_value,scaled,underflow,accuracy_loss");
        doc.row(fmt(r) + "," + fmt(z) + "," + fmt(e.value) + "," + fmt(e.log_value) + "," +
                fmt(r == 0.0 ? k0e(z) : k_imag_e(r, z).scaled) + "," +
                std::to_string(e.underflow ? 1 : 0) + "," +
                std::to_string(e.accuracy_loss ? 1 : 0));
    } else if (command == "kloosterman") {
        FuchsianGroup group = load_group(cfg);
        GeodesicFrame frame = require_frame(group, cfg, params);
        double X = require(cfg.cutoff_x, "cutoff_X");
        KloostermanQuery q;
        q.m = cfg.m.value_or(0);
        q.n = cfg.n.value_or(0);
        q.len_c1 = frame.len_c;
        OrthoSpectrum spec;
        if (!cfg.geodesic2_word.empty()) {
            PairCosets pair = pair_cosets(group, frame, cfg.geodesic2_word, X, params);
            spec = std::move(pair.spectrum);
            q.len_c2 = pair.len_c2;
        } else {
            spec = ortho_spectrum(group, frame, X, params);
            q.len_c2 = frame.len_c;
        }
        std::vector<double> xs = cfg.x_ladder;
        if (xs.empty() && cfg.x) xs.push_back(*cfg.x);
        if (xs.empty()) throw ConfigError("config: kloosterman needs params.x or x_ladder");
        doc.row("x,re,im,abs,count");
        for (double x : xs) {
            std::complex<double> s = kloosterman_sum(spec, q, x);
            std::complex<double> cnt = kloosterman_sum(spec, {0, 0, q.len_c1, q.len_c2}, x);
            doc.row(fmt(x) + "," + fmt(s.real()) + "," + fmt(s.imag()) + "," +
                    fmt(std::abs(s)) + "," + fmt(cnt.real()));
        }
    } else if (command == "basmajian") {
        FuchsianGroup group = load_group(cfg);
        GeodesicFrame frame = require_frame(group, cfg, params);
        if (cfg.geodesic2_word.empty())
            throw ConfigError("config: basmajian needs geodesic2.word");
        double X = require(cfg.cutoff_x, "cutoff_X");
        PairCosets pair = pair_cosets(group, frame, cfg.geodesic2_word, X, params);
        OrthoSpectrum self_spec = ortho_spectrum(group, frame, X, params);
        BasmajianResult res = basmajian_check(pair, self_spec, frame.len_c);
        doc.row("index,delta,len,term,partial_sum,bound");
        for (std::size_t i = 0; i < pair.spectrum.classes.size(); ++i) {
            const DoubleCosetRep& c = pair.spectrum.classes[i];
            double term = 0.5 * std::log((c.cls.delta + 2.0) / (c.cls.delta - 2.0));
            doc.row(std::to_string(i + 1) + "," + fmt(c.cls.delta) + "," +
                    fmt(c.ortholength) + "," + fmt(term) + "," + fmt(res.partial_sums[i]) +
                    "," + fmt(res.bound));
        }
        if (pair.spectrum.classes.empty())
            doc.row("0," + fmt(0.0) + "," + fmt(0.0) + "," + fmt(0.0) + "," + fmt(0.0) +
                    "," + fmt(res.bound));
    } else if (command == "synthetic") {
        SyntheticSpectrum s = synthetic_spectrum(require(cfg.vol_x, "volX"),
                                                 require(cfg.len_c, "lenC"),
                                                 require(cfg.lambda_max, "lambda_max"));
        doc.row("lambda,p");
        for (const SpectralDatum& d : s.entries)
            doc.row(fmt(d.lambda) + "," + fmt(d.p));
    } else {
        throw ConfigError("unknown command '" + command + "'");
    }
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative trace formula toolkit for closed geodesics"};
    app.set_version_flag("--version", std::string("orthospec ") + kVersion);
    app.require_subcommand(1);

    const char* commands[] = {"ortho-spectrum", "pair-spectrum", "geom-side",
                              "spectral-side",  "limit-check",   "small-t",
                              "bessel",         "kloosterman",   "basmajian",
                              "synthetic"};
    std::string config_path, out_path;
    for (const char* name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_path, "also write the document to this file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    auto start = std::chrono::steady_clock::now();
    try {
        GroupConfig cfg = parse_config(read_file(config_path));
        if (int t = env_threads_override(); t > 0) cfg.threads = t;
        Doc doc = run_command(command, cfg);
        std::fwrite(doc.text.data(), 1, doc.text.size(), stdout);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
            out << doc.text;
        }
    } catch (const ValidationError& e) {
        std::cerr << "orthospec: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "orthospec: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "orthospec: internal error: " << e.what() << "\n";
        return 4;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "orthospec: " << command << " finished in " << ms << " ms\n";
    return 0;
}
