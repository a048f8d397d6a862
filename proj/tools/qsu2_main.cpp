// qsu2: exact symbolic engine for gauge theory over quantum SU(2).
//
// Verbs: nf, coprod, antipode, ad, haar, pi, harmonic, delta, constants,
// curvature, eom, gauge, cocycle-check, suite.  Exit codes: 0 success,
// 1 identity-check failure, 2 usage error.

#include "qsu2/parser.hpp"
#include "qsu2/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qsu2;

namespace {

struct Options {
    std::string format = "text";
    std::optional<std::string> mu;  // numeric mode "p/q"
    int cutoff = 2;
    int dim = 4;
    uint64_t seed = 1;
    std::string config;
};

std::string scalar_str(const Options& opt, const MuScalar& s) {
    if (opt.mu) {
        GaussRat v = eval_at(s, rat_from_string(*opt.mu));
        return gauss_to_string(v);
    }
    return ms_to_string(s);
}

std::string form_label(int i, bool latex) {
    auto [k, m] = CalculusContext::unflat(i);
    std::ostringstream os;
    if (latex)
        os << "\\zeta_{" << k << "," << m << "}";
    else
        os << "z(" << k << "," << m << ")";
    return os.str();
}

// render a Tensor2Form in the display basis {eps, eta+, eta, eta-} when it is
// supported on spins <= 1, otherwise in harmonic labels
std::string tensor2_display(CalculusContext& ctx, const Tensor2Form& t, bool latex) {
    // change of basis on spins <= 1
    std::map<int, std::string> names;
    std::map<int, FormCoords> display;
    auto reg = [&](const std::string& n, const InvariantForm& f) {
        int id = (int)display.size();
        names[id] = n;
        display[id] = ctx.coords(f.q_rep);
    };
    CalculusContext& c = ctx;
    reg(latex ? "\\varepsilon" : "eps", c.epsilon_form());
    reg(latex ? "\\eta_+" : "eta+", c.eta_plus_form());
    reg(latex ? "\\eta" : "eta", c.eta_form());
    reg(latex ? "\\eta_-" : "eta-", c.eta_minus_form());
    // build the 4x4 transformation on the flat indices 0..3
    Mat mat(4, Vec(4));
    for (auto& [id, fc] : display)
        for (auto& [i, s] : fc) mat[i][id] = s;
    bool low_spin = true;
    for (auto& [ij, cc] : t.terms)
        if (ij.first > 3 || ij.second > 3) low_spin = false;
    std::ostringstream os;
    if (!low_spin) {
        bool first = true;
        for (auto& [ij, cc] : t.terms) {
            if (!first) os << " + ";
            first = false;
            os << "(" << ms_to_string(cc) << ") " << form_label(ij.first, latex)
               << (latex ? "\\otimes " : "(x)") << form_label(ij.second, latex);
        }
        return os.str();
    }
    // solve T = sum d_ab v_a (x) v_b for the display coefficients
    Mat big(16, Vec(16));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    big[i * 4 + j][a * 4 + b] = mat[i][a] * mat[j][b];
    Vec rhs(16);
    for (auto& [ij, cc] : t.terms) rhs[ij.first * 4 + ij.second] = cc;
    Vec x = solve_unique(big, rhs);
    bool first = true;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const MuScalar& cc = x[a * 4 + b];
            if (cc.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << ms_to_string(cc) << ") " << names[a]
               << (latex ? " \\otimes " : " (x) ") << names[b];
        }
    if (first) os << "0";
    return os.str();
}

int run_suites(const Options& opt, const std::string& which, int degree) {
    std::vector<Report> reports;
    auto want = [&](const char* n) { return which == n || which == "all"; };
    if (want("scalar")) reports.push_back(suite_scalar(opt.seed));
    if (want("hopf")) reports.push_back(suite_hopf(degree, opt.seed));
    if (want("peterweyl")) reports.push_back(suite_peterweyl(4));
    if (want("admissibility")) reports.push_back(suite_admissibility(4));
    if (want("calculus")) reports.push_back(suite_calculus(opt.cutoff, opt.seed));
    if (want("gauge")) reports.push_back(suite_gauge(std::min(opt.cutoff, 2), opt.dim, opt.seed));
    if (want("cocycle")) reports.push_back(suite_cocycle(opt.seed));
    if (reports.empty()) {
        std::cerr << "unknown suite: " << which << "\n";
        return 2;
    }
    bool ok = true;
    if (opt.format == "json") {
        Json arr = Json::array();
        for (auto& r : reports) {
            arr.push_back(report_to_json(r));
            ok = ok && r.ok();
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (auto& r : reports) {
            std::cout << report_to_text(r);
            ok = ok && r.ok();
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for gauge theory over quantum SU(2)"};
    app.require_subcommand(1);

    Options opt;
    std::string mu_str;
    app.add_option("--mu", mu_str, "numeric evaluation mode at mu = p/q");
    app.add_option("--cutoff", opt.cutoff, "spin cutoff")
        ->envname("QHG_CUTOFF");
    app.add_option("--dim", opt.dim, "base dimension for degree bookkeeping");
    app.add_option("--seed", opt.seed, "seed for the deterministic suites");
    app.add_option("--format", opt.format, "output format: text|json|latex");
    app.add_option("--config", opt.config, "cover/cocycle configuration file");

    std::string expr, suite_name = "all", basis = "triplet";
    int harmonic_k = 0, harmonic_m = 0, degree = 3;

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr)->required();
    auto* coprod = app.add_subcommand("coprod", "comultiplication of an expression");
    coprod->add_option("expr", expr)->required();
    auto* anti = app.add_subcommand("antipode", "antipode of an expression");
    anti->add_option("expr", expr)->required();
    auto* ad = app.add_subcommand("ad", "adjoint coaction of an expression");
    ad->add_option("expr", expr)->required();
    auto* haar = app.add_subcommand("haar", "Haar state of an expression");
    haar->add_option("expr", expr)->required();
    auto* pi = app.add_subcommand("pi", "projection to invariant forms (rho-image)");
    pi->add_option("expr", expr)->required();
    auto* harm = app.add_subcommand("harmonic", "quantum spherical harmonic");
    harm->add_option("k", harmonic_k)->required();
    harm->add_option("m", harmonic_m)->required();
    auto* delta = app.add_subcommand("delta", "embedded differential on a basis");
    delta->add_option("--basis", basis, "singlet|triplet|all");
    auto* consts = app.add_subcommand("constants", "structure constant table");
    auto* curv = app.add_subcommand("curvature", "curvature of the generic connection");
    auto* eom = app.add_subcommand("eom", "Yang-Mills equations of motion");
    auto* gauge = app.add_subcommand("gauge", "gauge transformation checks");
    auto* cocheck = app.add_subcommand("cocycle-check", "validate a cocycle configuration");
    auto* suite = app.add_subcommand("suite", "run a property suite");
    suite->add_option("name", suite_name,
                      "scalar|hopf|peterweyl|admissibility|calculus|gauge|cocycle|all");
    suite->add_option("--degree", degree, "degree bound for random elements");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!mu_str.empty()) opt.mu = mu_str;

    try {
        if (*nf) {
            AlgebraElement e = eval_ast_element(*parse(expr));
            std::cout << algebra_to_string(e) << "\n";
            return 0;
        }
        if (*coprod) {
            AlgebraElement e = eval_ast_element(*parse(expr));
            std::cout << tensor_to_string(comultiply(e)) << "\n";
            return 0;
        }
        if (*anti) {
            AlgebraElement e = eval_ast_element(*parse(expr));
            std::cout << algebra_to_string(antipode(e)) << "\n";
            return 0;
        }
        if (*ad) {
            AlgebraElement e = eval_ast_element(*parse(expr));
            std::cout << tensor_to_string(adjoint(e)) << "\n";
            return 0;
        }
        if (*haar) {
            AlgebraElement e = eval_ast_element(*parse(expr));
            HaarState h;
            h.ensure(std::max(0, e.degree()));
            std::cout << scalar_str(opt, h(e)) << "\n";
            return 0;
        }
        if (*pi) {
            AlgebraElement e = eval_ast_element(*parse(expr));
            CalculusContext ctx(opt.cutoff);
            InvariantForm f = ctx.pi_project(e);
            if (opt.format == "json") {
                std::cout << invariant_form_to_json(ctx, f).dump(2) << "\n";
            } else {
                std::cout << algebra_to_string(f.q_rep) << "\n";
            }
            return 0;
        }
        if (*harm) {
            CalculusContext ctx(std::max(opt.cutoff, std::abs(harmonic_k)));
            const AlgebraElement& z = ctx.harmonic(harmonic_k, harmonic_m);
            if (opt.format == "json") {
                Json j{{"k", harmonic_k},
                       {"m", harmonic_m},
                       {"engine", to_json(z)},
                       {"scale2", to_json(ctx.harmonic_scale2(harmonic_k, harmonic_m))}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << algebra_to_string(z) << "\n";
                std::cout << "scale^2 = "
                          << scalar_str(opt, ctx.harmonic_scale2(harmonic_k, harmonic_m))
                          << "\n";
            }
            return 0;
        }
        if (*delta) {
            CalculusContext ctx(std::max(opt.cutoff, 1));
            bool latex = opt.format == "latex";
            std::vector<std::pair<std::string, InvariantForm>> fs;
            if (basis == "singlet" || basis == "triplet" || basis == "all") {
                fs.emplace_back(latex ? "\\varepsilon" : "eps", ctx.epsilon_form());
                if (basis != "singlet") {
                    fs.emplace_back(latex ? "\\eta_+" : "eta+", ctx.eta_plus_form());
                    fs.emplace_back(latex ? "\\eta" : "eta", ctx.eta_form());
                    fs.emplace_back(latex ? "\\eta_-" : "eta-", ctx.eta_minus_form());
                }
            } else {
                std::cerr << "unknown basis " << basis << "\n";
                return 2;
            }
            Json out = Json::array();
            for (auto& [name, f] : fs) {
                Tensor2Form d = ctx.embedded_differential(f);
                if (opt.format == "json") {
                    out.push_back({{"form", name}, {"delta", tensor2_to_json(d)}});
                } else if (latex) {
                    std::cout << "-\\delta(" << name
                              << ") = " << tensor2_display(ctx, d * MuScalar(-1), true)
                              << "\\\\\n";
                } else {
                    std::cout << "-delta(" << name
                              << ") = " << tensor2_display(ctx, d * MuScalar(-1), false)
                              << "\n";
                }
            }
            if (opt.format == "json") std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*consts) {
            CalculusContext ctx(opt.cutoff);
            if (opt.format == "json") {
                std::cout << structure_constants_to_json(ctx).dump(2) << "\n";
            } else {
                for (auto& [key, c] : ctx.structure_constants()) {
                    auto [i, j, k] = key;
                    std::cout << "d[" << form_label(i, false) << "," << form_label(j, false)
                              << ";" << form_label(k, false) << "] = " << scalar_str(opt, c)
                              << "\n";
                }
            }
            return 0;
        }
        if (*curv) {
            CalculusContext ctx(opt.cutoff);
            GaugeContext g(ctx, opt.dim);
            auto F = g.curvature(g.free_connection());
            bool latex = opt.format == "latex";
            Json out = Json::array();
            for (auto& [i, fi] : F) {
                if (opt.format == "json") {
                    auto [k, m] = CalculusContext::unflat(i);
                    out.push_back(
                        {{"index", {{"k", k}, {"m", m}}}, {"terms", field_to_json(fi)}});
                } else {
                    std::cout << (latex ? "F_{" : "F(") << form_label(i, latex)
                              << (latex ? "} = " : ") = ") << field_to_string(fi, latex)
                              << "\n";
                }
            }
            if (opt.format == "json") std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*eom) {
            CalculusContext ctx(opt.cutoff);
            GaugeContext g(ctx, opt.dim);
            if (opt.format == "json") {
                std::cout << eom_to_json(g).dump(2) << "\n";
                return 0;
            }
            bool latex = opt.format == "latex";
            auto eq = g.equations_of_motion();
            for (auto& [k, e] : eq)
                std::cout << field_to_string(e, latex) << " = 0\n";
            return 0;
        }
        if (*gauge) {
            CalculusContext ctx(std::min(opt.cutoff, 2));
            GaugeContext g(ctx, opt.dim);
            Report rep = suite_gauge(std::min(opt.cutoff, 2), opt.dim, opt.seed);
            if (opt.format == "json")
                std::cout << report_to_json(rep).dump(2) << "\n";
            else
                std::cout << report_to_text(rep);
            return rep.ok() ? 0 : 1;
        }
        if (*cocheck) {
            CocycleConfig cfg;
            if (!opt.config.empty()) {
                std::ifstream in(opt.config);
                if (!in) {
                    std::cerr << "cannot open " << opt.config << "\n";
                    return 2;
                }
                Json j;
                in >> j;
                cfg = cocycle_config_from_json(j);
            } else {
                // default: a random coboundary family over the full 3-cover
                Rng rng(opt.seed);
                cfg.cover = CoverNerve::full(3);
                std::vector<ChartCharacter> h;
                for (int i = 0; i < 3; ++i) h.push_back(rng.chart_character(2));
                CocycleFamily fam = CocycleFamily::coboundary(cfg.cover, h);
                for (auto& pr : cfg.cover.nerve2)
                    cfg.g.emplace(pr, fam.at(pr.first, pr.second));
            }
            CocycleFamily fam(cfg.cover, cfg.g);
            Report rep{"cocycle-check", {}};
            std::string why;
            rep.add("cocycle_identities", fam.validate(&why), why);
            Rng rng(opt.seed);
            {
                ChartSection s;
                for (int i = 0; i < 3; ++i) s.add(rng.monomial(2), rng.chart_fn(2));
                LocalSection spread = spread_from_chart(fam, 0, s, GlueMode::GaugeBundle);
                rep.add("gauge_bundle_gluing", glue_check(fam, spread, GlueMode::GaugeBundle));
                LocalSection spreadB = spread_from_chart(fam, 0, s, GlueMode::Bundle);
                rep.add("bundle_gluing", glue_check(fam, spreadB, GlueMode::Bundle));
            }
            if (opt.format == "json")
                std::cout << report_to_json(rep).dump(2) << "\n";
            else
                std::cout << report_to_text(rep);
            return rep.ok() ? 0 : 1;
        }
        if (*suite) return run_suites(opt, suite_name, degree);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
