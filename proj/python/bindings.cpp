#include "qsu2/parser.hpp"
#include "qsu2/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qsu2;

namespace {

AlgebraElement parse_element(const std::string& s) { return eval_ast_element(*parse(s)); }

std::string delta_json(int cutoff) {
    CalculusContext ctx(cutoff);
    Json out = Json::array();
    for (int i = 0; i < ctx.flat_size(); ++i) {
        auto [k, m] = CalculusContext::unflat(i);
        out.push_back({{"k", k},
                       {"m", m},
                       {"delta", tensor2_to_json(ctx.embedded_differential(
                                     ctx.form_from_q(ctx.harmonic(k, m))))}});
    }
    return out.dump();
}

std::string report_json(const Report& r) { return report_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_qsu2, m) {
    m.doc() = "exact symbolic engine for gauge theory over quantum SU(2)";

    py::register_exception<Error>(m, "EngineError");

    py::class_<MuScalar>(m, "MuScalar")
        .def("__repr__", [](const MuScalar& s) { return ms_to_string(s); })
        .def("__eq__", [](const MuScalar& a, const MuScalar& b) { return a == b; })
        .def("__add__", [](const MuScalar& a, const MuScalar& b) { return a + b; })
        .def("__sub__", [](const MuScalar& a, const MuScalar& b) { return a - b; })
        .def("__mul__", [](const MuScalar& a, const MuScalar& b) { return a * b; })
        .def("__truediv__", [](const MuScalar& a, const MuScalar& b) { return a / b; })
        .def("__neg__", [](const MuScalar& a) { return -a; })
        .def("is_zero", &MuScalar::is_zero)
        .def("conjugate", [](const MuScalar& s) { return conj(s); })
        .def("eval",
             [](const MuScalar& s, const std::string& mu0) {
                 GaussRat v = eval_at(s, rat_from_string(mu0));
                 return py::make_tuple(v.re.get_str(), v.im.get_str());
             })
        .def("to_json", [](const MuScalar& s) { return to_json(s).dump(); });

    m.def("mu", &ms_mu);
    m.def("qint", &qint, py::arg("j"));
    m.def("qfact", &qfact, py::arg("k"));

    py::class_<AlgebraElement>(m, "AlgebraElement")
        .def("__repr__", [](const AlgebraElement& a) { return algebra_to_string(a); })
        .def("__eq__",
             [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
        .def("__add__",
             [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
        .def("__sub__",
             [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
        .def("__mul__",
             [](const AlgebraElement& a, const AlgebraElement& b) { return a * b; })
        .def("__neg__", [](const AlgebraElement& a) { return -a; })
        .def("is_zero", &AlgebraElement::is_zero)
        .def("degree", &AlgebraElement::degree)
        .def("star", [](const AlgebraElement& a) { return star(a); })
        .def("antipode", [](const AlgebraElement& a) { return antipode(a); })
        .def("counit", [](const AlgebraElement& a) { return counit(a); })
        .def("coproduct_str",
             [](const AlgebraElement& a) { return tensor_to_string(comultiply(a)); })
        .def("adjoint_str",
             [](const AlgebraElement& a) { return tensor_to_string(adjoint(a)); })
        .def("to_json", [](const AlgebraElement& a) { return to_json(a).dump(); });

    m.def("parse", &parse_element, py::arg("expr"),
          "parse an expression in the generators a, a*, g, g* into normal form");
    m.def("normal_form_str",
          [](const std::string& s) { return algebra_to_string(parse_element(s)); });
    m.def("haar", [](const AlgebraElement& a) {
        HaarState h;
        h.ensure(std::max(0, a.degree()));
        return h(a);
    });
    m.def("rho", [](const AlgebraElement& a) { return rho(a); },
          "the faithful image of pi(a) in the quantum 2-sphere algebra");

    py::class_<CalculusContext>(m, "Calculus")
        .def(py::init<int>(), py::arg("cutoff"))
        .def("cutoff", &CalculusContext::cutoff)
        .def("harmonic",
             [](CalculusContext& c, int k, int m) { return c.harmonic(k, m); })
        .def("pi",
             [](CalculusContext& c, const AlgebraElement& a) {
                 return c.pi_project(a).q_rep;
             })
        .def("delta_json",
             [](CalculusContext& c, int k, int m) {
                 return tensor2_to_json(
                            c.embedded_differential(c.form_from_q(c.harmonic(k, m))))
                     .dump();
             })
        .def("structure_constants_json",
             [](CalculusContext& c) { return structure_constants_to_json(c).dump(); })
        .def("selection_rule", &CalculusContext::selection_rule_check);

    m.def("delta_table_json", &delta_json, py::arg("cutoff") = 1);
    m.def("eom_json", [](int cutoff, int dim) {
        CalculusContext calc(cutoff);
        GaugeContext g(calc, dim);
        return eom_to_json(g).dump();
    }, py::arg("cutoff") = 1, py::arg("dim") = 4);
    m.def("curvature_json", [](int cutoff, int dim) {
        CalculusContext calc(cutoff);
        GaugeContext g(calc, dim);
        Json out = Json::array();
        for (auto& [i, fi] : g.curvature(g.free_connection())) {
            auto [k, mm] = CalculusContext::unflat(i);
            out.push_back({{"index", {{"k", k}, {"m", mm}}}, {"terms", field_to_json(fi)}});
        }
        return out.dump();
    }, py::arg("cutoff") = 1, py::arg("dim") = 4);

    m.def("suite", [](const std::string& name, int cutoff, int dim, uint64_t seed) {
        Report r;
        if (name == "scalar") r = suite_scalar(seed);
        else if (name == "hopf") r = suite_hopf(3, seed);
        else if (name == "peterweyl") r = suite_peterweyl(4);
        else if (name == "admissibility") r = suite_admissibility(4);
        else if (name == "calculus") r = suite_calculus(cutoff, seed);
        else if (name == "gauge") r = suite_gauge(std::min(cutoff, 2), dim, seed);
        else if (name == "cocycle") r = suite_cocycle(seed);
        else throw Error("unknown suite " + name);
        return report_json(r);
    }, py::arg("name"), py::arg("cutoff") = 2, py::arg("dim") = 4, py::arg("seed") = 1);
}
