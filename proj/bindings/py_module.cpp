#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reeblens/class_invariants.hpp"
#include "reeblens/dyn_verify.hpp"
#include "reeblens/esh_ranks.hpp"
#include "reeblens/index_engine.hpp"
#include "reeblens/serialize.hpp"
#include "reeblens/verify.hpp"

namespace py = pybind11;
using namespace reeblens;

namespace {

RotationPath make_path(const std::vector<std::pair<Rational, long long>>& blocks,
                       const Rational& duration) {
    std::vector<RotationBlock> bs;
    for (const auto& [speed, count] : blocks) bs.push_back({speed, count});
    return RotationPath(std::move(bs), duration);
}

} // namespace

PYBIND11_MODULE(_reeblens, m) {
    m.doc() = "Exact invariants of lens-space Reeb flows";

    py::register_exception<error>(m, "ReeblensError");

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long>())
        .def(py::init<long long, long long>())
        .def(py::init([](const std::string& s) { return Rational::parse(s); }))
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__float__", &Rational::to_double)
        .def("__hash__", [](const Rational& r) { return std::hash<long long>()(r.num()) ^ std::hash<long long>()(r.den() << 1); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self);
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    py::class_<HomotopyClass>(m, "HomotopyClass")
        .def_readonly("j", &HomotopyClass::j)
        .def_readonly("weights", &HomotopyClass::weights)
        .def("__repr__", [](const HomotopyClass& c) {
            return "HomotopyClass(j=" + std::to_string(c.j) + ")";
        });

    py::class_<LensSpace>(m, "LensSpace")
        .def(py::init<long long, std::vector<long long>>(), py::arg("p"), py::arg("weights"))
        .def_property_readonly("p", &LensSpace::p)
        .def_property_readonly("n", &LensSpace::n)
        .def_property_readonly("weights", &LensSpace::weights)
        .def("homotopy_class", &LensSpace::homotopy_class, py::arg("j"))
        .def("classes", &LensSpace::classes)
        .def("chern_order", &LensSpace::chern_order)
        .def(py::self == py::self);

    m.def("k_a", &k_a, py::arg("lens"), py::arg("cls"));
    m.def("h_a", &h_a, py::arg("lens"), py::arg("cls"));
    m.def("h_tilde_a", &h_tilde_a, py::arg("lens"), py::arg("cls"));
    m.def("positivity", &positivity, py::arg("lens"), py::arg("cls"));
    m.def("find_positive_classes", &find_positive_classes, py::arg("lens"));

    py::class_<WeightMultiplicities>(m, "WeightMultiplicities")
        .def_readonly("abs_values", &WeightMultiplicities::abs_values)
        .def_readonly("mu", &WeightMultiplicities::mu)
        .def_readonly("nu", &WeightMultiplicities::nu)
        .def_readonly("mu_tilde", &WeightMultiplicities::mu_tilde)
        .def_readonly("nu_tilde", &WeightMultiplicities::nu_tilde);
    m.def("multiplicities", &multiplicities, py::arg("lens"), py::arg("cls"));

    py::class_<RotationPath>(m, "RotationPath")
        .def(py::init(&make_path), py::arg("blocks"), py::arg("duration") = Rational(1))
        .def_property_readonly("duration", &RotationPath::duration)
        .def_property_readonly("half_dim", &RotationPath::half_dim)
        .def("plane_speeds", &RotationPath::plane_speeds)
        .def("iterate", &RotationPath::iterate, py::arg("k"))
        .def("shifted", &RotationPath::shifted, py::arg("q"));

    m.def("cz_index", &cz_index, py::arg("path"));
    m.def("mean_index", &mean_index, py::arg("path"));
    m.def("compose_diagonal", &compose_diagonal, py::arg("a"), py::arg("b"));

    py::class_<BottJump>(m, "BottJump")
        .def_readonly("angle", &BottJump::angle)
        .def_readonly("s_plus", &BottJump::s_plus)
        .def_readonly("s_minus", &BottJump::s_minus);

    py::class_<BottFunction>(m, "BottFunction")
        .def_static("from_path", &BottFunction::from_path, py::arg("path"))
        .def_property_readonly("value_at_one", &BottFunction::value_at_one)
        .def_property_readonly("s_at_one", &BottFunction::s_at_one)
        .def_property_readonly("jumps", &BottFunction::jumps)
        .def("at", &BottFunction::at, py::arg("angle_turns"))
        .def("sum_over_roots", &BottFunction::sum_over_roots, py::arg("k"))
        .def("integral", &BottFunction::integral)
        .def("max_excluding_one", &BottFunction::max_excluding_one)
        .def(py::self + py::self)
        .def(py::self == py::self);

    m.def("twist_ga", &twist_ga, py::arg("lens"), py::arg("cls"));
    m.def("twist_ga_eps", &twist_ga_eps, py::arg("lens"), py::arg("cls"), py::arg("eps"));
    m.def("eps_upper_bound", &eps_upper_bound, py::arg("lens"), py::arg("cls"));
    m.def("orbit_index", &orbit_index, py::arg("lens"), py::arg("cls"), py::arg("gamma_beta"));
    m.def("ellipsoid_min_index", &ellipsoid_min_index, py::arg("lens"), py::arg("cls"),
          py::arg("halve_eps") = false);
    m.def("toric_orbit_index", &toric_orbit_index, py::arg("lens"), py::arg("cls"), py::arg("m"));
    m.def("toric_lift_path", &toric_lift_path, py::arg("lens"), py::arg("cls"), py::arg("m"));
    m.def("elliptic_certificate", &elliptic_certificate, py::arg("bott"), py::arg("half_dim"));

    py::class_<GradedRanks>(m, "GradedRanks")
        .def_property_readonly("ranks",
                               [](const GradedRanks& t) {
                                   std::vector<std::pair<Rational, long long>> out(
                                       t.ranks.begin(), t.ranks.end());
                                   return out;
                               })
        .def("min_degree", [](const GradedRanks& t) { return min_degree(t); })
        .def("to_json", [](const GradedRanks& t) { return to_json(t).dump(); });

    m.def("iterate_index", &iterate_index, py::arg("n"), py::arg("p"), py::arg("k"));
    m.def("graded_ranks", &graded_ranks, py::arg("n"), py::arg("p"), py::arg("j"),
          py::arg("k_max"));
    m.def("filtered_ranks", &filtered_ranks, py::arg("n"), py::arg("p"), py::arg("scale"),
          py::arg("action"));
    m.def("carrier_degrees", [](int n, long long p) {
        CarrierDegrees c = carrier_degrees(n, p);
        return std::make_pair(c.degrees, c.count_below_h);
    });

    py::enum_<SpectrumKind>(m, "SpectrumKind")
        .value("rotation", SpectrumKind::rotation)
        .value("hyperbolic", SpectrumKind::hyperbolic)
        .value("unit_minus_one", SpectrumKind::unit_minus_one)
        .value("unit_plus_one", SpectrumKind::unit_plus_one);

    py::class_<SpectrumEntry>(m, "SpectrumEntry")
        .def(py::init([](SpectrumKind kind, const Rational& param, long long count) {
                 return SpectrumEntry{kind, param, count};
             }),
             py::arg("kind"), py::arg("param"), py::arg("count") = 2)
        .def_readonly("kind", &SpectrumEntry::kind)
        .def_readonly("param", &SpectrumEntry::param)
        .def_readonly("count", &SpectrumEntry::count);

    py::class_<OrbitRecord>(m, "OrbitRecord")
        .def(py::init([](LensSpace lens, long long j, const Rational& action,
                         const Rational& index, long long nullity,
                         std::vector<SpectrumEntry> spectrum) {
                 return OrbitRecord{std::move(lens), j, action, index, nullity,
                                    std::move(spectrum)};
             }),
             py::arg("lens"), py::arg("j"), py::arg("action"), py::arg("index"),
             py::arg("nullity"), py::arg("spectrum"))
        .def_readonly("j", &OrbitRecord::j)
        .def_readonly("action", &OrbitRecord::action)
        .def_readonly("index", &OrbitRecord::index)
        .def_readonly("nullity", &OrbitRecord::nullity);

    py::enum_<OrbitClass>(m, "OrbitClass")
        .value("elliptic", OrbitClass::elliptic)
        .value("hyperbolic", OrbitClass::hyperbolic)
        .value("neither", OrbitClass::neither);
    m.def("classify", &classify, py::arg("orbit"));

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_readonly("strict", &TheoremReport::strict)
        .def_readonly("k_a", &TheoremReport::k_a)
        .def_readonly("h_a", &TheoremReport::h_a)
        .def_readonly("h_tilde_a", &TheoremReport::h_tilde_a)
        .def_readonly("violations", &TheoremReport::violations)
        .def("consistent", &TheoremReport::consistent);
    m.def("check_main_theorem", &check_main_theorem, py::arg("orbit"), py::arg("strict"));

    m.def("delta_search", &delta_search, py::arg("n"), py::arg("p"));
    m.def("delta_fn", &delta_fn, py::arg("x"));
    m.def(
        "dc_inequality_check",
        [](int n, long long p, long long delta, const Rational& eps, long long q,
           const Rational& t_g) {
            DcInequality r = dc_inequality_check(n, p, delta, eps, q, t_g);
            return std::make_pair(r.holds, r.sufficient_route);
        },
        py::arg("n"), py::arg("p"), py::arg("delta"), py::arg("eps"), py::arg("q"),
        py::arg("t_g"));
    m.def("hyperbolic_index_eq", &hyperbolic_index_eq, py::arg("n"), py::arg("p"),
          py::arg("j_a"));

    py::class_<PinchingData>(m, "PinchingData")
        .def(py::init([](const Rational& r, const Rational& R, long long p, int n) {
                 return PinchingData{r, R, p, n};
             }),
             py::arg("r"), py::arg("R"), py::arg("p"), py::arg("n"))
        .def_readonly("r", &PinchingData::r)
        .def_readonly("R", &PinchingData::R)
        .def_readonly("p", &PinchingData::p)
        .def_readonly("n", &PinchingData::n);

    m.def("pinching_ok", &pinching_ok, py::arg("data"));
    m.def("cw_min_period", &cw_min_period, py::arg("data"));
    m.def("simplicity_certificate", &simplicity_certificate, py::arg("data"), py::arg("k"),
          py::arg("period"));
    py::enum_<ConvexKind>(m, "ConvexKind")
        .value("h_pinched", ConvexKind::h_pinched)
        .value("pinched_strictly_convex", ConvexKind::pinched_strictly_convex);
    m.def("multiplicity_guarantee", &multiplicity_guarantee, py::arg("data"), py::arg("kind"));

    m.def("run_suite", [](const std::string& suite) {
        auto checks = verify::run_suite(suite);
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : checks) out.emplace_back(c.name, c.pass, c.detail);
        return std::make_pair(verify::all_passed(checks), out);
    });

    m.def("bott_csv", &bott_csv, py::arg("bott"), py::arg("divisor") = 1);
    m.def("invariants_json", [](const LensSpace& lens) {
        return invariants_table_json(lens).dump();
    });
}
