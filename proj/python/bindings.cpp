#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthospec/bessel.hpp"
#include "orthospec/config.hpp"
#include "orthospec/spectra.hpp"
#include "orthospec/version.hpp"

namespace py = pybind11;
using namespace orthospec;

namespace {

EnumerationParams make_params(std::size_t budget, int threads, double prune_factor,
                              double margin) {
    EnumerationParams p;
    p.budget = budget;
    p.threads = threads;
    p.prune_factor = prune_factor;
    p.margin = margin;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "relative trace formula toolkit for closed geodesics on compact "
              "hyperbolic surfaces";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<UpperHalfPoint>(m, "UpperHalfPoint")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &UpperHalfPoint::x)
        .def_readwrite("y", &UpperHalfPoint::y)
        .def("__repr__", [](const UpperHalfPoint& z) {
            return "UpperHalfPoint(" + std::to_string(z.x) + ", " + std::to_string(z.y) + ")";
        });

    py::class_<Moebius>(m, "Moebius")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"))
        .def_readonly("a", &Moebius::a)
        .def_readonly("b", &Moebius::b)
        .def_readonly("c", &Moebius::c)
        .def_readonly("d", &Moebius::d)
        .def("apply", &Moebius::apply)
        .def("inverse", &Moebius::inverse)
        .def("trace", &Moebius::trace)
        .def("det", &Moebius::det)
        .def("norm2", &Moebius::norm2)
        .def("__mul__", [](const Moebius& g, const Moebius& h) { return g * h; })
        .def("__repr__", [](const Moebius& g) {
            return "Moebius(" + std::to_string(g.a) + ", " + std::to_string(g.b) + ", " +
                   std::to_string(g.c) + ", " + std::to_string(g.d) + ")";
        });

    m.def("point_pair_u", &point_pair_u);
    m.def("hyperbolic_distance", &hyperbolic_distance);

    py::enum_<DeltaKind>(m, "DeltaKind")
        .value("Identity", DeltaKind::Identity)
        .value("Exceptional", DeltaKind::Exceptional)
        .value("Regular", DeltaKind::Regular);

    py::class_<DeltaClass>(m, "DeltaClass")
        .def_readonly("delta", &DeltaClass::delta)
        .def_readonly("kind", &DeltaClass::kind);

    m.def("delta_invariant", &delta_invariant);
    m.def("axis_distance", &axis_distance);
    m.def("intersection_angle", &intersection_angle);
    m.def("lambda_invariants", [](const Moebius& g) {
        LambdaInvariants li = lambda_invariants(g);
        return py::make_tuple(li.lambda_l, li.lambda_r, li.nu);
    });
    m.def("diagonalize_hyperbolic", [](const Moebius& g) {
        Diagonalization d = diagonalize_hyperbolic(g);
        return py::make_tuple(d.sigma, d.m);
    });

    py::class_<FuchsianGroup>(m, "FuchsianGroup")
        .def_readonly("generators", &FuchsianGroup::generators)
        .def_readonly("label", &FuchsianGroup::label);

    m.def("builtin_bolza", &builtin_bolza);
    m.def("make_group", &make_group, py::arg("generators"), py::arg("label") = "group");
    m.def("evaluate_word", [](const FuchsianGroup& g, const std::vector<int>& w) {
        return evaluate_word(g, w);
    });

    py::class_<GeodesicFrame>(m, "GeodesicFrame")
        .def_readonly("sigma", &GeodesicFrame::sigma)
        .def_readonly("m", &GeodesicFrame::m)
        .def_readonly("len_c", &GeodesicFrame::len_c)
        .def_readonly("primitive_checked", &GeodesicFrame::primitive_checked);

    py::class_<DoubleCosetRep>(m, "DoubleCosetRep")
        .def_readonly("rep", &DoubleCosetRep::rep)
        .def_readonly("cls", &DoubleCosetRep::cls)
        .def_readonly("ortholength", &DoubleCosetRep::ortholength)
        .def_readonly("angle", &DoubleCosetRep::angle)
        .def_readonly("nu", &DoubleCosetRep::nu)
        .def_readonly("lambda_l", &DoubleCosetRep::lambda_l)
        .def_readonly("lambda_r", &DoubleCosetRep::lambda_r);

    py::class_<OrthoSpectrum>(m, "OrthoSpectrum")
        .def_readonly("classes", &OrthoSpectrum::classes)
        .def_readonly("entries", &OrthoSpectrum::entries)
        .def_readonly("exceptional", &OrthoSpectrum::exceptional)
        .def_readonly("cutoff", &OrthoSpectrum::cutoff);

    py::class_<PairCosets>(m, "PairCosets")
        .def_readonly("spectrum", &PairCosets::spectrum)
        .def_readonly("tau", &PairCosets::tau)
        .def_readonly("m2", &PairCosets::m2)
        .def_readonly("len_c2", &PairCosets::len_c2);

    auto params = [](py::kwargs kw) {
        return make_params(kw.contains("budget") ? kw["budget"].cast<std::size_t>() : 5'000'000,
                           kw.contains("threads") ? kw["threads"].cast<int>() : 0,
                           kw.contains("prune_factor") ? kw["prune_factor"].cast<double>() : 16.0,
                           kw.contains("margin") ? kw["margin"].cast<double>() : 0.25);
    };
    m.def("enumerate_ball",
          [params](const FuchsianGroup& g, double R, py::kwargs kw) {
              return enumerate_ball_checked(g, R, params(kw));
          },
          py::arg("group"), py::arg("R"));
    m.def("geodesic_frame",
          [params](const FuchsianGroup& g, const std::vector<int>& w, py::kwargs kw) {
              return geodesic_frame(g, w, params(kw));
          },
          py::arg("group"), py::arg("word"));
    m.def("double_coset_reduce", &double_coset_reduce);
    m.def("ortho_spectrum",
          [params](const FuchsianGroup& g, const GeodesicFrame& f, double X, py::kwargs kw) {
              return ortho_spectrum(g, f, X, params(kw));
          },
          py::arg("group"), py::arg("frame"), py::arg("cutoff"));
    m.def("pi_delta", &pi_delta);
    m.def("pair_cosets",
          [params](const FuchsianGroup& g, const GeodesicFrame& f, const std::vector<int>& w,
                   double X, py::kwargs kw) { return pair_cosets(g, f, w, X, params(kw)); },
          py::arg("group"), py::arg("frame"), py::arg("word2"), py::arg("cutoff"));

    // Special functions.  Scaled variants return e^z K(z).
    m.def("k0e", &k0e);
    m.def("k0", [](double z) {
        BesselEval e = k0(z);
        return py::make_tuple(e.value, e.log_value, e.underflow);
    });
    m.def("k_real_e", &k_real_e, py::arg("nu"), py::arg("z"));
    m.def("k_imag_e", [](double r, double z) {
        ImagBessel b = k_imag_e(r, z);
        return py::make_tuple(b.scaled, b.accuracy_loss);
    });
    m.def("uniform_asymptotic", [](double r, double z) {
        UniformKResult u = uniform_asymptotic(r, z);
        return py::make_tuple(u.value, u.scaled, u.regime.error_estimate);
    });
    m.def("decay_bound", &decay_bound);
    m.def("decay_bound_scaled", &decay_bound_scaled);
    m.def("elliptic_K", &elliptic_K);

    py::class_<ExponentialKernel>(m, "ExponentialKernel")
        .def(py::init<double>(), py::arg("t"))
        .def_readonly("t", &ExponentialKernel::t);
    py::class_<TabulatedKernel>(m, "TabulatedKernel")
        .def(py::init([](std::vector<double> x, std::vector<double> phi, double rate) {
                 TabulatedKernel k;
                 k.x = std::move(x);
                 k.phi = std::move(phi);
                 k.tail_rate = rate;
                 return k;
             }),
             py::arg("x"), py::arg("phi"), py::arg("tail_rate"));

    m.def("selberg_transform", &selberg_transform);
    m.def("kernel_eval", &kernel_eval);

    py::class_<SpectralDatum>(m, "SpectralDatum")
        .def(py::init<double, double>(), py::arg("lam"), py::arg("p"))
        .def_readonly("lam", &SpectralDatum::lambda)
        .def_readonly("p", &SpectralDatum::p);

    py::class_<GeometricSideResult>(m, "GeometricSideResult")
        .def_readonly("main_term", &GeometricSideResult::main_term)
        .def_readonly("exceptional_sum", &GeometricSideResult::exceptional_sum)
        .def_readonly("regular_sum", &GeometricSideResult::regular_sum)
        .def_readonly("total", &GeometricSideResult::total)
        .def_readonly("truncation_bound", &GeometricSideResult::truncation_bound)
        .def_readonly("cutoff", &GeometricSideResult::cutoff)
        .def_readonly("t", &GeometricSideResult::t);

    m.def("orbital_integral_exp", &orbital_integral_exp, py::arg("delta"), py::arg("t"));
    m.def("orbital_integral_general", &orbital_integral_general, py::arg("delta"),
          py::arg("kernel"));
    m.def("main_term", &main_term, py::arg("kernel"), py::arg("len_c"));
    m.def("geometric_side", &geometric_side, py::arg("spectrum"), py::arg("len_c"),
          py::arg("kernel"), py::arg("tol") = 0.0);
    m.def("pairs_geometric_side", &pairs_geometric_side, py::arg("pair_spectrum"),
          py::arg("t"), py::arg("tol") = 0.0);
    m.def("spectral_side",
          [](const std::vector<std::pair<double, double>>& data, double t) {
              std::vector<SpectralDatum> v;
              v.reserve(data.size());
              for (auto [lam, p] : data) v.push_back({lam, p});
              return spectral_side(std::move(v), t);
          },
          py::arg("data"), py::arg("t"));
    m.def("twisted_main_term",
          [](int j, int k, double len_c, double t) {
              return twisted_main_term({j, k}, len_c, t);
          },
          py::arg("j"), py::arg("k"), py::arg("len_c"), py::arg("t"));

    py::class_<SyntheticSpectrum>(m, "SyntheticSpectrum")
        .def_readonly("entries", &SyntheticSpectrum::entries)
        .def_readonly("model", &SyntheticSpectrum::model)
        .def_readonly("vol_x", &SyntheticSpectrum::vol_x)
        .def_readonly("len_c", &SyntheticSpectrum::len_c);

    m.def("synthetic_spectrum", &synthetic_spectrum, py::arg("vol_x"), py::arg("len_c"),
          py::arg("lambda_max"));
    m.def("synthetic_spectrum_jittered", &synthetic_spectrum_jittered, py::arg("vol_x"),
          py::arg("len_c"), py::arg("lambda_max"), py::arg("seed"));

    py::class_<LadderRow>(m, "LadderRow")
        .def_readonly("parameter", &LadderRow::parameter)
        .def_readonly("value", &LadderRow::value)
        .def_readonly("target", &LadderRow::target)
        .def_readonly("rel_gap", &LadderRow::rel_gap)
        .def_readonly("bound", &LadderRow::bound);

    m.def("laplace_limit_check",
          [](const SyntheticSpectrum& s, const std::vector<double>& zs) {
              return laplace_limit_check(s.entries, zs, s.len_c);
          },
          py::arg("spectrum"), py::arg("z_ladder"));
    m.def("moment_sum",
          [](const SyntheticSpectrum& s, double alpha, double lo, double hi) {
              return moment_sum(s.entries, alpha, lo, hi);
          },
          py::arg("spectrum"), py::arg("alpha"), py::arg("r_lo"), py::arg("r_hi"));
    m.def("small_t_asymptotic",
          [](const OrthoSpectrum& spec, double len_c, double vol_x,
             const std::vector<double>& ts, double tol) {
              return small_t_asymptotic(spec, len_c, vol_x, ts, tol);
          },
          py::arg("spectrum"), py::arg("len_c"), py::arg("vol_x"), py::arg("t_ladder"),
          py::arg("tol") = 0.0);

    py::class_<CountRow>(m, "CountRow")
        .def_readonly("x", &CountRow::x)
        .def_readonly("count", &CountRow::count)
        .def_readonly("per_x", &CountRow::per_x)
        .def_readonly("per_x2", &CountRow::per_x2);

    m.def("count_bounds_report", &count_bounds_report);
    m.def("kloosterman_sum",
          [](const OrthoSpectrum& spec, int mm, int nn, double len1, double len2, double x) {
              return kloosterman_sum(spec, {mm, nn, len1, len2}, x);
          },
          py::arg("spectrum"), py::arg("m"), py::arg("n"), py::arg("len_c1"),
          py::arg("len_c2"), py::arg("x"));

    py::class_<BasmajianResult>(m, "BasmajianResult")
        .def_readonly("partial_sum", &BasmajianResult::partial_sum)
        .def_readonly("bound", &BasmajianResult::bound)
        .def_readonly("partial_sums", &BasmajianResult::partial_sums);

    m.def("basmajian_check", &basmajian_check, py::arg("pair"), py::arg("c1_self"),
          py::arg("len_c1"));
}
