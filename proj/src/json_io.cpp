#include "qsu2/json_io.hpp"

namespace qsu2 {

namespace {

Json poly_to_json(const MuPoly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        GaussRat c = p.coeff(i);
        arr.push_back({rat_to_string(c.re), rat_to_string(c.im)});
    }
    if (arr.empty()) arr.push_back({"0", "0"});
    return arr;
}

MuPoly poly_from_json(const Json& j) {
    std::vector<GaussRat> c;
    for (auto& e : j)
        c.emplace_back(rat_from_string(e.at(0).get<std::string>()),
                       rat_from_string(e.at(1).get<std::string>()));
    return MuPoly(std::move(c));
}

}  // namespace

Json to_json(const MuScalar& s) {
    return Json{{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}};
}

MuScalar muscalar_from_json(const Json& j) {
    return MuScalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json to_json(const AlgebraElement& a) {
    Json arr = Json::array();
    for (auto& [mo, c] : a.terms())
        arr.push_back({{"branch", mo.branch ? "as" : "a"},
                       {"a", mo.a},
                       {"m", mo.m},
                       {"n", mo.n},
                       {"coeff", to_json(c)}});
    return arr;
}

AlgebraElement algebra_from_json(const Json& j) {
    AlgebraElement a;
    for (auto& e : j) {
        Monomial mo;
        mo.branch = e.at("branch").get<std::string>() == "as" ? 1 : 0;
        mo.a = e.at("a").get<int>();
        mo.m = e.at("m").get<int>();
        mo.n = e.at("n").get<int>();
        if (mo.branch && mo.a < 1) throw Error("a* branch requires power >= 1");
        a.add_term(mo, muscalar_from_json(e.at("coeff")));
    }
    return a;
}

Json to_json(const ChartFn& f) {
    auto arr = [](const Poly<MuScalar>& p) {
        Json a = Json::array();
        for (int i = 0; i <= p.degree(); ++i) a.push_back(to_json(p.coeff(i)));
        if (a.empty()) a.push_back(to_json(MuScalar()));
        return a;
    };
    return Json{{"num", arr(f.num())}, {"den", arr(f.den())}};
}

ChartFn chartfn_from_json(const Json& j) {
    auto poly = [](const Json& a) {
        std::vector<MuScalar> c;
        for (auto& e : a) c.push_back(muscalar_from_json(e));
        return Poly<MuScalar>(std::move(c));
    };
    return ChartFn(poly(j.at("num")), poly(j.at("den")));
}

Json invariant_form_to_json(CalculusContext& ctx, const InvariantForm& f) {
    Json mult = Json::array();
    for (auto& [i, c] : ctx.coords(f.q_rep)) {
        auto [k, m] = CalculusContext::unflat(i);
        mult.push_back({{"k", k}, {"m", m}, {"coeff", to_json(c)}});
    }
    return Json{{"multiplets", mult}, {"q_rep", to_json(f.q_rep)}};
}

Json tensor2_to_json(const Tensor2Form& t) {
    Json arr = Json::array();
    for (auto& [ij, c] : t.terms) {
        auto [k1, m1] = CalculusContext::unflat(ij.first);
        auto [k2, m2] = CalculusContext::unflat(ij.second);
        arr.push_back({{"k1", k1}, {"m1", m1}, {"k2", k2}, {"m2", m2}, {"coeff", to_json(c)}});
    }
    return arr;
}

Json structure_constants_to_json(CalculusContext& ctx) {
    Json basis = Json::array();
    for (int i = 0; i < ctx.flat_size(); ++i) {
        auto [k, m] = CalculusContext::unflat(i);
        basis.push_back({{"k", k}, {"m", m}, {"scale2", to_json(ctx.harmonic_scale2(k, m))}});
    }
    Json d = Json::array();
    for (auto& [key, c] : ctx.structure_constants()) {
        auto [i, j, k] = key;
        d.push_back({{"k", k}, {"i", i}, {"j", j}, {"value", to_json(c)}});
    }
    return Json{{"basis", basis}, {"d", d}};
}

Json field_to_json(const FieldExpression& e) {
    Json terms = Json::array();
    for (auto& [syms, c] : e.terms()) {
        Json ss = Json::array();
        for (auto& s : syms) {
            const char* kind = s.kind == SymKind::A    ? "A"
                               : s.kind == SymKind::DA ? "dA"
                               : s.kind == SymKind::S  ? "*F"
                               : s.kind == SymKind::DS ? "d*F"
                                                       : "dt";
            auto [k, m] = CalculusContext::unflat(s.index);
            ss.push_back({{"type", kind}, {"k", k}, {"m", m}});
        }
        terms.push_back({{"symbols", ss}, {"coeff", to_json(c)}});
    }
    return terms;
}

Json eom_to_json(GaugeContext& g) {
    auto eq = g.equations_of_motion();
    Json arr = Json::array();
    for (auto& [k, e] : eq) {
        auto [kk, mm] = CalculusContext::unflat(k);
        arr.push_back({{"index", {{"k", kk}, {"m", mm}}}, {"terms", field_to_json(e)}});
    }
    Json basis = Json::array();
    for (int i = 0; i < g.nbasis(); ++i) {
        auto [k, m] = CalculusContext::unflat(i);
        basis.push_back({{"k", k}, {"m", m}, {"scale2", to_json(g.scale2(i))}});
    }
    return Json{{"dim", g.dim()}, {"cutoff", g.calculus().cutoff()},
                {"basis", basis}, {"equations", arr}};
}

Json cocycle_config_to_json(const CocycleConfig& c) {
    Json charts = Json::array();
    for (auto& name : c.cover.charts) charts.push_back(name);
    Json n2 = Json::array();
    for (auto& [u, v] : c.cover.nerve2) n2.push_back({u, v});
    Json n3 = Json::array();
    for (auto& t : c.cover.nerve3) n3.push_back({t[0], t[1], t[2]});
    Json cocycles = Json::array();
    for (auto& [uv, g] : c.g)
        cocycles.push_back({{"from", uv.first}, {"to", uv.second}, {"z", to_json(g.z)}});
    return Json{{"charts", charts}, {"nerve2", n2}, {"nerve3", n3}, {"cocycles", cocycles}};
}

CocycleConfig cocycle_config_from_json(const Json& j) {
    CocycleConfig c;
    for (auto& e : j.at("charts")) c.cover.charts.push_back(e.get<std::string>());
    for (auto& e : j.at("nerve2")) c.cover.nerve2.insert({e.at(0).get<int>(), e.at(1).get<int>()});
    for (auto& e : j.at("nerve3"))
        c.cover.nerve3.insert({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    for (auto& e : j.at("cocycles")) {
        ChartFn z = chartfn_from_json(e.at("z"));
        c.g.emplace(std::make_pair(e.at("from").get<int>(), e.at("to").get<int>()),
                    ChartCharacter(z, conj(z)));
    }
    return c;
}

}  // namespace qsu2
