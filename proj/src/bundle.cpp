#include "qsu2/bundle.hpp"

#include <sstream>

namespace qsu2 {

struct NerveError : Error {
    explicit NerveError(const std::string& what) : Error(what) {}
};

bool CoverNerve::has_triple(int u, int v, int w) const {
    if (u == v) return has_pair(v, w);
    if (v == w) return has_pair(u, v);
    if (u == w) return has_pair(u, v) && has_pair(v, w);
    return nerve3.count({u, v, w}) > 0;
}

void CoverNerve::validate() const {
    for (auto& [u, v] : nerve2) {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw NerveError("nerve pair out of range");
        if (!nerve2.count({v, u})) throw NerveError("nerve2 not symmetric");
    }
    for (auto& t : nerve3) {
        int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : perm)
            if (!nerve3.count({t[p[0]], t[p[1]], t[p[2]]}))
                throw NerveError("nerve3 not permutation closed");
        if (!nerve2.count({t[0], t[1]}) || !nerve2.count({t[1], t[2]}) ||
            !nerve2.count({t[0], t[2]}))
            throw NerveError("nerve3 does not project into nerve2");
    }
}

CoverNerve CoverNerve::full(int n) {
    CoverNerve c;
    for (int i = 0; i < n; ++i) c.charts.push_back("U" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) c.nerve2.insert({i, j});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i != j && j != k && i != k) c.nerve3.insert({i, j, k});
    return c;
}

CocycleFamily::CocycleFamily(CoverNerve cover, std::map<std::pair<int, int>, ChartCharacter> g)
    : cover_(std::move(cover)), g_(std::move(g)) {
    cover_.validate();
}

const ChartCharacter& CocycleFamily::at(int u, int v) const {
    static const ChartCharacter one = ChartCharacter::identity();
    if (u == v) return one;
    auto it = g_.find({u, v});
    if (it == g_.end()) throw NerveError("pair not in the nerve");
    return it->second;
}

bool CocycleFamily::validate(std::string* firstFailure) const {
    auto fail = [&](const std::string& s) {
        if (firstFailure) *firstFailure = s;
        return false;
    };
    for (auto& [uv, g] : g_) {
        auto [u, v] = uv;
        if (!cover_.has_pair(u, v)) return fail("cocycle on a pair outside the nerve");
        const ChartCharacter& ginv = at(v, u);
        if (!(g.z * ginv.z == ChartFn(1))) return fail("g_UV g_VU != 1");
    }
    for (auto& t : cover_.nerve3) {
        const ChartCharacter &a = at(t[0], t[1]), &b = at(t[1], t[2]), &c = at(t[0], t[2]);
        if (!(a.z * b.z == c.z)) return fail("cocycle identity fails on a triple");
    }
    return true;
}

CocycleFamily CocycleFamily::coboundary(CoverNerve cover,
                                        const std::vector<ChartCharacter>& h) {
    if ((int)h.size() != cover.size()) throw Error("one chart character per chart required");
    std::map<std::pair<int, int>, ChartCharacter> g;
    for (auto& [u, v] : cover.nerve2)
        g.emplace(std::make_pair(u, v), h[u] * h[v].inverse());
    return CocycleFamily(std::move(cover), std::move(g));
}

// --- sections ------------------------------------------------------------------------

void ChartSection::add(const Monomial& mo, const ChartFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(mo, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ChartSection ChartSection::operator+(const ChartSection& o) const {
    ChartSection r(*this);
    for (auto& [mo, c] : o.t_) r.add(mo, c);
    return r;
}
ChartSection ChartSection::operator-(const ChartSection& o) const {
    ChartSection r(*this);
    for (auto& [mo, c] : o.t_) r.add(mo, -c);
    return r;
}
ChartSection ChartSection::operator*(const ChartSection& o) const {
    ChartSection r;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) {
            AlgebraElement p = mono_mul(m1, m2);
            for (auto& [mo, c] : p.terms()) r.add(mo, c1 * c2 * chart_const(c));
        }
    return r;
}
ChartSection ChartSection::operator*(const ChartFn& f) const {
    ChartSection r;
    if (f.is_zero()) return r;
    for (auto& [mo, c] : t_) r.add(mo, c * f);
    return r;
}
ChartSection ChartSection::star_section() const {
    ChartSection r;
    for (auto& [mo, c] : t_) {
        AlgebraElement s = star(AlgebraElement::monomial(mo));
        for (auto& [m2, c2] : s.terms()) r.add(m2, conj(c) * chart_const(c2));
    }
    return r;
}

ChartSection ChartSection::from_algebra(const AlgebraElement& a, const ChartFn& f) {
    ChartSection r;
    for (auto& [mo, c] : a.terms()) r.add(mo, f * chart_const(c));
    return r;
}

void ChartSection2::add(const Key& k, const ChartFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ChartSection2 ChartSection2::operator-(const ChartSection2& o) const {
    ChartSection2 r(*this);
    for (auto& [k, c] : o.t_) r.add(k, -c);
    return r;
}

// --- transition maps -----------------------------------------------------------------

namespace {

// expansion of the one-leg transition map on a monomial:
// psi: a -> sum g_VU(a(1)) (x) a(2);  xi: a -> sum g_UV[kappa(a(1)) a(3)] (x) a(2)
std::vector<std::pair<ChartFn, Monomial>> leg_map(const CocycleFamily& fam, int u, int v,
                                                  const Monomial& a, bool use_xi) {
    std::vector<std::pair<ChartFn, Monomial>> out;
    if (use_xi) {
        Tensor t3 = comultiply_iter(AlgebraElement::monomial(a), 3);
        std::map<Monomial, ChartFn> acc;
        const ChartCharacter& g = fam.at(u, v);
        for (auto& [key, c] : t3.terms()) {
            auto [km, kc] = antipode_mono(key[0]);
            AlgebraElement arg = mono_mul(km, key[2]);
            ChartFn val = chart_char_eval(g, arg) * chart_const(c * kc);
            if (val.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(key[1], val);
            if (!fresh) it->second += val;
        }
        for (auto& [mo, c] : acc)
            if (!c.is_zero()) out.emplace_back(c, mo);
    } else {
        Tensor t2 = comultiply(AlgebraElement::monomial(a));
        std::map<Monomial, ChartFn> acc;
        const ChartCharacter& g = fam.at(v, u);
        for (auto& [key, c] : t2.terms()) {
            ChartFn val = g.eval(key[0]) * chart_const(c);
            if (val.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(key[1], val);
            if (!fresh) it->second += val;
        }
        for (auto& [mo, c] : acc)
            if (!c.is_zero()) out.emplace_back(c, mo);
    }
    return out;
}

}  // namespace

ChartSection psi_map(const CocycleFamily& fam, int u, int v, const ChartSection& s) {
    if (!fam.cover().has_pair(u, v)) throw NerveError("psi on a pair outside the nerve");
    ChartSection r;
    for (auto& [mo, c] : s.terms())
        for (auto& [f, m2] : leg_map(fam, u, v, mo, false)) r.add(m2, c * f);
    return r;
}

ChartSection xi_map(const CocycleFamily& fam, int u, int v, const ChartSection& s) {
    if (!fam.cover().has_pair(u, v)) throw NerveError("xi on a pair outside the nerve");
    ChartSection r;
    for (auto& [mo, c] : s.terms())
        for (auto& [f, m2] : leg_map(fam, u, v, mo, true)) r.add(m2, c * f);
    return r;
}

ChartSection2 section_coproduct(const ChartSection& s) {
    ChartSection2 r;
    for (auto& [mo, c] : s.terms()) {
        Tensor t = comultiply(mo);
        for (auto& [key, cc] : t.terms()) r.add({key[0], key[1]}, c * chart_const(cc));
    }
    return r;
}

ChartFn section_counit(const ChartSection& s) {
    ChartFn r;
    for (auto& [mo, c] : s.terms()) r += c * chart_const(counit(mo));
    return r;
}

ChartSection section_antipode(const ChartSection& s) {
    ChartSection r;
    for (auto& [mo, c] : s.terms()) {
        auto [km, kc] = antipode_mono(mo);
        r.add(km, c * chart_const(kc));
    }
    return r;
}

ChartSection2 map_leg2(const CocycleFamily& fam, int u, int v, const ChartSection2& s,
                       int leg, bool use_xi) {
    ChartSection2 r;
    for (auto& [key, c] : s.terms()) {
        const Monomial& target = (leg == 0) ? key.first : key.second;
        for (auto& [f, m2] : leg_map(fam, u, v, target, use_xi)) {
            ChartSection2::Key k2 = key;
            (leg == 0 ? k2.first : k2.second) = m2;
            r.add(k2, c * f);
        }
    }
    return r;
}

// --- gluing -------------------------------------------------------------------------

bool glue_check(const CocycleFamily& fam, const LocalSection& s, GlueMode mode,
                std::string* firstFailure) {
    const CoverNerve& cov = fam.cover();
    if ((int)s.size() != cov.size()) throw Error("one chart leg per chart required");
    for (auto& [u, v] : cov.nerve2) {
        ChartSection lhs = s[u];
        ChartSection rhs = (mode == GlueMode::GaugeBundle) ? xi_map(fam, u, v, s[v])
                                                           : psi_map(fam, u, v, s[v]);
        if (!(lhs == rhs)) {
            if (firstFailure) {
                std::ostringstream os;
                os << "gluing fails on pair (" << cov.charts[u] << "," << cov.charts[v] << ")";
                *firstFailure = os.str();
            }
            return false;
        }
    }
    return true;
}

LocalSection spread_from_chart(const CocycleFamily& fam, int u, const ChartSection& s,
                               GlueMode mode) {
    LocalSection out(fam.cover().size());
    for (int v = 0; v < fam.cover().size(); ++v) {
        if (v == u) {
            out[v] = s;
            continue;
        }
        if (!fam.cover().has_pair(v, u)) throw NerveError("cover is not chart-connected");
        out[v] = (mode == GlueMode::GaugeBundle) ? xi_map(fam, v, u, s)
                                                 : psi_map(fam, v, u, s);
    }
    return out;
}

LocalSection constant_section(const CocycleFamily& fam, const ChartFn& f) {
    LocalSection out(fam.cover().size());
    for (int v = 0; v < fam.cover().size(); ++v) out[v] = ChartSection(f);
    return out;
}

LocalStructureMaps local_structure_maps(const CocycleFamily& fam, const LocalSection& q,
                                        bool require_membership) {
    if (require_membership) {
        std::string why;
        if (!glue_check(fam, q, GlueMode::GaugeBundle, &why))
            throw Error("input is not a gauge-bundle section: " + why);
    }
    LocalStructureMaps out;
    for (auto& leg : q) {
        out.phi.push_back(section_coproduct(leg));
        out.eps.push_back(section_counit(leg));
        out.kappa.push_back(section_antipode(leg));
    }
    out.eps_common = out.eps.empty() ? ChartFn() : out.eps[0];
    for (auto& e : out.eps)
        if (!(e == out.eps_common))
            throw Error("counit images disagree between charts: not S(M)-valued");
    return out;
}

// --- gauge transformations -------------------------------------------------------------

bool gauge_data_compatible(const CocycleFamily& fam, const GaugeData& gd,
                           std::string* firstFailure) {
    const CoverNerve& cov = fam.cover();
    if ((int)gd.gamma.size() != cov.size()) throw Error("one character per chart required");
    for (auto& [u, v] : cov.nerve2) {
        // gamma_V(a(1)) g_VU(a(2)) = gamma_U(a): as characters, product equality
        ChartFn lhs = gd.gamma[v].z * fam.at(v, u).z;
        if (!(lhs == gd.gamma[u].z)) {
            if (firstFailure)
                *firstFailure = "gauge data incompatible on (" + cov.charts[u] + "," +
                                cov.charts[v] + ")";
            return false;
        }
    }
    return true;
}

GaugeData gauge_data_from_seed(const CocycleFamily& fam, const ChartCharacter& seed) {
    GaugeData gd;
    for (int v = 0; v < fam.cover().size(); ++v) {
        // gamma_v = gamma_0 . g_{v 0}-correction so that compatibility holds
        if (v == 0) {
            gd.gamma.push_back(seed);
        } else {
            if (!fam.cover().has_pair(0, v)) throw NerveError("cover is not chart-connected");
            gd.gamma.push_back(seed * fam.at(0, v));
        }
    }
    return gd;
}

GaugeData gauge_data_inverse(const GaugeData& gd) {
    GaugeData out;
    for (auto& g : gd.gamma) out.gamma.push_back(g.inverse());
    return out;
}

GaugeData gauge_data_compose(const CocycleFamily& fam, const GaugeData& a, const GaugeData& b) {
    (void)fam;
    GaugeData out;
    for (size_t i = 0; i < a.gamma.size(); ++i) out.gamma.push_back(a.gamma[i] * b.gamma[i]);
    return out;
}

LocalSection gauge_apply(const GaugeData& gd, const LocalSection& s) {
    LocalSection out(s.size());
    for (size_t u = 0; u < s.size(); ++u) {
        ChartSection r;
        for (auto& [mo, c] : s[u].terms()) {
            Tensor t = comultiply(mo);
            for (auto& [key, cc] : t.terms()) {
                ChartFn gv = gd.gamma[u].eval(key[0]);
                if (gv.is_zero()) continue;
                r.add(key[1], c * gv * chart_const(cc));
            }
        }
        out[u] = std::move(r);
    }
    return out;
}

ChartFn gauge_functional(const CocycleFamily& fam, const GaugeData& gd,
                         const LocalSection& s) {
    (void)fam;
    std::optional<ChartFn> common;
    for (size_t u = 0; u < s.size(); ++u) {
        ChartFn val;
        for (auto& [mo, c] : s[u].terms()) val += c * gd.gamma[u].eval(mo);
        if (!common)
            common = val;
        else if (!(*common == val))
            throw Error("gauge functional is not S(M)-valued on this section");
    }
    return common ? *common : ChartFn();
}

// --- classical points ---------------------------------------------------------------------

MuScalar point_eval(const BundlePoint& p, const LocalSection& s) {
    Character fib(p.fiber, conj(p.fiber));
    MuScalar r;
    for (auto& [mo, c] : s[p.chart].terms()) {
        MuScalar fv = fib.eval(mo);
        if (fv.is_zero()) continue;
        r += c.eval(ms_rat(p.t0)) * fv;
    }
    return r;
}

BundlePoint classical_restriction(const GaugeData& gd, const BundlePoint& p) {
    // chi' = chi . gamma^-1 with gamma^-1 chartwise gamma_U . kappa; on the
    // generator alpha this multiplies the fiber value by conj(gamma_U(alpha))(t0)
    const ChartCharacter& g = gd.gamma[p.chart];
    MuScalar zt = g.zbar.eval(ms_rat(p.t0));
    BundlePoint out;
    out.chart = p.chart;
    out.t0 = p.t0;
    out.fiber = p.fiber * zt;
    return out;
}

// --- differential model ---------------------------------------------------------------------

ChartFormElem ChartFormElem::operator+(const ChartFormElem& o) const {
    ChartFormElem r(*this);
    for (auto& [k, c] : o.d0) r.add_d0(k, c);
    for (auto& [k, c] : o.dt1) r.add_dt1(k, c);
    for (auto& [k, c] : o.g1) r.add_g1(k.first, k.second, c);
    return r;
}
ChartFormElem ChartFormElem::operator-(const ChartFormElem& o) const {
    ChartFormElem r(*this);
    for (auto& [k, c] : o.d0) r.add_d0(k, -c);
    for (auto& [k, c] : o.dt1) r.add_dt1(k, -c);
    for (auto& [k, c] : o.g1) r.add_g1(k.first, k.second, -c);
    return r;
}

namespace {
template <class M, class K, class V>
void map_add(M& m, const K& k, const V& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}
}  // namespace

void ChartFormElem::add_d0(const Monomial& mo, const ChartFn& c) { map_add(d0, mo, c); }
void ChartFormElem::add_dt1(const Monomial& mo, const ChartFn& c) { map_add(dt1, mo, c); }
void ChartFormElem::add_g1(const Monomial& mo, int form, const ChartFn& c) {
    map_add(g1, std::make_pair(mo, form), c);
}

ChartFormElem ChartFormElem::from_section(const ChartSection& s) {
    ChartFormElem r;
    for (auto& [mo, c] : s.terms()) r.add_d0(mo, c);
    return r;
}

ChartFormElem chart_d(CalculusContext& calc, const ChartSection& s) {
    ChartFormElem r;
    for (auto& [mo, c] : s.terms()) {
        r.add_dt1(mo, chart_ddt(c));
        Tensor t = comultiply(mo);
        for (auto& [key, cc] : t.terms()) {
            FormCoords fc = calc.coords(rho(key[1]));
            for (auto& [l, sc] : fc) r.add_g1(key[0], l, c * chart_const(cc * sc));
        }
    }
    return r;
}

ChartFormElem xi_wedge_degree1(CalculusContext& calc, const CocycleFamily& fam, int u, int v,
                               const ChartFormElem& w) {
    ChartFormElem r;
    // degree-0 part and the dt part are S- resp. Omega^1(U)-linear
    {
        ChartSection s0;
        for (auto& [mo, c] : w.d0) s0.add(mo, c);
        ChartSection m0 = xi_map(fam, u, v, s0);
        for (auto& [mo, c] : m0.terms()) r.add_d0(mo, c);
        ChartSection s1;
        for (auto& [mo, c] : w.dt1) s1.add(mo, c);
        ChartSection m1 = xi_map(fam, u, v, s1);
        for (auto& [mo, c] : m1.terms()) r.add_dt1(mo, c);
    }
    // Gamma part: xi^(f (x) a theta_i) = xi(f (x) a) . xi^(1 (x) theta_i), and
    // with theta_i = pi(c):  xi^(1 (x) pi(c)) = xi(1 (x) kappa(c(1))) d xi(1 (x) c(2))
    for (auto& [key, c] : w.g1) {
        auto [mo, form] = key;
        auto [k, m] = CalculusContext::unflat(form);
        AlgebraElement pre = calc.section_inverse(calc.harmonic(k, m));
        // head: xi(f (x) a), with f carried by the coefficient c
        ChartSection head;
        {
            ChartSection s;
            s.add(mo, c);
            head = xi_map(fam, u, v, s);
        }
        Tensor t = comultiply(pre);
        // accumulate xi(1 (x) kappa(c1)) (x) d[xi(1 (x) c2)] term by term
        for (auto& [kk, cc] : t.terms()) {
            auto [km, kc] = antipode_mono(kk[0]);
            ChartSection left = xi_map(fam, u, v, ChartSection::from_algebra(
                                                       AlgebraElement::monomial(km)));
            ChartSection right =
                xi_map(fam, u, v, ChartSection::from_algebra(AlgebraElement::monomial(kk[1])));
            ChartFormElem dright = chart_d(calc, right);
            // (head * left) * dright, all of degree 0 * degree 1
            ChartSection hl = head * left * chart_const(cc * kc);
            for (auto& [m2, c2] : hl.terms()) {
                for (auto& [m3, c3] : dright.dt1) {
                    AlgebraElement p = mono_mul(m2, m3);
                    for (auto& [mp, cp] : p.terms())
                        r.add_dt1(mp, c2 * c3 * chart_const(cp));
                }
                for (auto& [k3, c3] : dright.g1) {
                    AlgebraElement p = mono_mul(m2, k3.first);
                    for (auto& [mp, cp] : p.terms())
                        r.add_g1(mp, k3.second, c2 * c3 * chart_const(cp));
                }
            }
        }
    }
    return r;
}

}  // namespace qsu2
