#include "qsu2/gauge.hpp"

#include <algorithm>
#include <sstream>

namespace qsu2 {

ChartFn chart_ddt(const ChartFn& f) {
    Poly<MuScalar> n = f.num(), d = f.den();
    return ChartFn(n.derivative() * d - n * d.derivative(), d * d);
}

ChartFn chart_char_eval(const ChartCharacter& g, const AlgebraElement& a) {
    ChartFn r;
    for (auto& [mo, c] : a.terms()) {
        ChartFn v = g.eval(mo);
        if (!v.is_zero()) r += v * chart_const(c);
    }
    return r;
}

ChartCharacter chart_character_standard(const Rat& c) {
    if (c == 0) throw RangeError("standard chart character needs c != 0");
    ChartFn num(Poly<MuScalar>{std::vector<MuScalar>{ms_rat(c), ms_i()}});
    ChartFn den(Poly<MuScalar>{std::vector<MuScalar>{ms_rat(c), -ms_i()}});
    return ChartCharacter(num / den, den / num);
}

int symbol_degree(SymKind k, int dim) {
    switch (k) {
        case SymKind::A: return 1;
        case SymKind::DA: return 2;
        case SymKind::S: return dim - 2;
        case SymKind::DS: return dim - 1;
        case SymKind::Dt: return 1;
    }
    return 0;
}

FieldExpression FieldExpression::scalar(const ChartFn& c, int dim) {
    FieldExpression e(dim);
    e.add_term({}, c);
    return e;
}

FieldExpression FieldExpression::symbol(SymKind k, int index, int dim) {
    FieldExpression e(dim);
    e.add_term({FieldSymbol{k, index}}, ChartFn(1));
    return e;
}

int FieldExpression::degree() const {
    if (t_.empty()) return -1;
    int d = 0;
    for (auto& s : t_.begin()->first) d += symbol_degree(s.kind, dim_);
    return d;
}

void FieldExpression::add_term(Term syms, ChartFn c) {
    if (c.is_zero()) return;
    // insertion sort with Koszul signs; repeated odd symbols vanish
    bool negative = false;
    for (size_t i = 1; i < syms.size(); ++i)
        for (size_t j = i; j > 0 && syms[j] < syms[j - 1]; --j) {
            bool odd1 = symbol_degree(syms[j].kind, dim_) % 2;
            bool odd2 = symbol_degree(syms[j - 1].kind, dim_) % 2;
            if (odd1 && odd2) negative = !negative;
            std::swap(syms[j], syms[j - 1]);
        }
    for (size_t i = 1; i < syms.size(); ++i)
        if (syms[i] == syms[i - 1] && symbol_degree(syms[i].kind, dim_) % 2) return;
    if (negative) c = -c;
    auto [it, fresh] = t_.try_emplace(std::move(syms), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

FieldExpression FieldExpression::operator-() const {
    FieldExpression r(dim_);
    for (auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

FieldExpression FieldExpression::operator+(const FieldExpression& o) const {
    FieldExpression r(*this);
    for (auto& [k, c] : o.t_) r.add_term(k, c);
    return r;
}

FieldExpression FieldExpression::operator-(const FieldExpression& o) const {
    FieldExpression r(*this);
    for (auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

FieldExpression FieldExpression::operator*(const FieldExpression& o) const {
    FieldExpression r(dim_);
    for (auto& [k1, c1] : t_)
        for (auto& [k2, c2] : o.t_) {
            Term k = k1;
            k.insert(k.end(), k2.begin(), k2.end());
            r.add_term(std::move(k), c1 * c2);
        }
    return r;
}

FieldExpression FieldExpression::operator*(const ChartFn& c) const {
    FieldExpression r(dim_);
    if (c.is_zero()) return r;
    for (auto& [k, cc] : t_) r.add_term(k, cc * c);
    return r;
}

FieldExpression FieldExpression::d() const {
    FieldExpression r(dim_);
    for (auto& [k, c] : t_) {
        // coefficient part
        ChartFn dc = chart_ddt(c);
        if (!dc.is_zero()) {
            Term t;
            t.push_back(FieldSymbol{SymKind::Dt, 0});
            t.insert(t.end(), k.begin(), k.end());
            r.add_term(std::move(t), dc);
        }
        // symbol part, with the sign of the degrees passed over
        int passed = 0;
        for (size_t i = 0; i < k.size(); ++i) {
            SymKind kd = k[i].kind;
            SymKind target;
            if (kd == SymKind::A)
                target = SymKind::DA;
            else if (kd == SymKind::S)
                target = SymKind::DS;
            else {
                passed += symbol_degree(kd, dim_);
                continue;
            }
            Term t = k;
            t[i] = FieldSymbol{target, k[i].index};
            ChartFn cc = (passed % 2) ? -c : c;
            r.add_term(std::move(t), cc);
            passed += symbol_degree(kd, dim_);
        }
    }
    return r;
}

FieldExpression FieldExpression::substitute_linear(
    const std::function<std::vector<std::pair<int, ChartFn>>(SymKind, int)>& image) const {
    FieldExpression r(dim_);
    for (auto& [k, c] : t_) {
        std::vector<FieldExpression> factors;
        for (auto& s : k) {
            if (s.kind == SymKind::Dt) {
                factors.push_back(FieldExpression::symbol(SymKind::Dt, 0, dim_));
                continue;
            }
            FieldExpression f(dim_);
            for (auto& [j, cf] : image(s.kind, s.index))
                f += FieldExpression::symbol(s.kind, j, dim_) * cf;
            factors.push_back(std::move(f));
        }
        FieldExpression acc = FieldExpression::scalar(c, dim_);
        for (auto& f : factors) acc = acc * f;
        r += acc;
    }
    return r;
}

namespace {
std::string sym_name(const FieldSymbol& s, bool latex) {
    auto [k, m] = CalculusContext::unflat(s.index);
    std::ostringstream os;
    switch (s.kind) {
        case SymKind::A: os << (latex ? "A_{" : "A("); break;
        case SymKind::DA: os << (latex ? "dA_{" : "dA("); break;
        case SymKind::S: os << (latex ? "{\\star}F_{" : "*F("); break;
        case SymKind::DS: os << (latex ? "d{\\star}F_{" : "d*F("); break;
        case SymKind::Dt: return latex ? "\\,dt" : "dt";
    }
    os << k << "," << m << (latex ? "}" : ")");
    return os.str();
}
}  // namespace

std::string field_to_string(const FieldExpression& e, bool latex) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : e.terms()) {
        std::ostringstream cf;
        if (c.den().degree() == 0 && c.num().degree() <= 0) {
            cf << ms_to_string(c.is_zero() ? MuScalar() : c.constant_value());
        } else {
            cf << "(" << xpoly_to_string(c.num(), "t") << ")";
            if (!(c.den().degree() == 0 && c.den().coeff(0) == MuScalar(1)))
                cf << "/(" << xpoly_to_string(c.den(), "t") << ")";
        }
        std::string cs = cf.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find('+') == std::string::npos &&
                   cs.find('-', 1) == std::string::npos;
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        if (neg) cs = cs.substr(1);
        first = false;
        bool composite = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        if (k.empty()) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << " ";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) os << (latex ? " " : " ");
            os << sym_name(k[i], latex);
        }
    }
    return os.str();
}

// --- connections -------------------------------------------------------------

const FieldExpression& LocalConnection::at(int i) const {
    auto it = value.find(i);
    if (it == value.end()) throw CutoffError("connection has no component at this index");
    return it->second;
}

LocalConnection GaugeContext::free_connection() const {
    LocalConnection c;
    c.cutoff = calc_.cutoff();
    c.dim = dim_;
    for (int i = 0; i < calc_.flat_size(); ++i)
        c.value.emplace(i, FieldExpression::symbol(SymKind::A, i, dim_));
    return c;
}

LocalConnection GaugeContext::zero_connection() const {
    LocalConnection c;
    c.cutoff = calc_.cutoff();
    c.dim = dim_;
    for (int i = 0; i < calc_.flat_size(); ++i) c.value.emplace(i, FieldExpression(dim_));
    return c;
}

FieldExpression GaugeContext::bracket(const std::map<int, FieldExpression>& phi,
                                      const std::map<int, FieldExpression>& psi, int i) {
    auto [k, m] = CalculusContext::unflat(i);
    if (k > calc_.cutoff()) throw CutoffError("bracket index beyond cutoff");
    const Tensor2Form& d = calc_.delta_basis(i);
    FieldExpression r(dim_);
    for (auto& [jl, c] : d.terms) {
        auto p = phi.find(jl.first);
        auto q = psi.find(jl.second);
        if (p == phi.end() || q == psi.end())
            throw CutoffError("bracket legs outside the connection support");
        r += (p->second * q->second) * c;
    }
    return r;
}

std::map<int, FieldExpression> GaugeContext::curvature(const LocalConnection& a) {
    std::map<int, FieldExpression> f;
    for (auto& [i, ai] : a.value) f.emplace(i, ai.d() - bracket(a.value, a.value, i));
    return f;
}

MuScalar GaugeContext::scale2(int i) {
    auto [k, m] = CalculusContext::unflat(i);
    return calc_.harmonic_scale2(k, m);
}

FieldExpression GaugeContext::lagrangian(const std::map<int, FieldExpression>& f) {
    FieldExpression l(dim_);
    for (auto& [i, fi] : f)
        l += (fi * FieldExpression::symbol(SymKind::S, i, dim_)) * scale2(i);
    return l;
}

std::map<int, FieldExpression> GaugeContext::equations_of_motion() {
    std::map<int, FieldExpression> eq;
    int nb = nbasis();
    for (int k = 0; k < nb; ++k) {
        FieldExpression e = FieldExpression::symbol(SymKind::DS, k, dim_);
        for (int i = 0; i < nb; ++i) {
            MuScalar w = scale2(i) / scale2(k);
            for (int j = 0; j < nb; ++j) {
                MuScalar c = calc_.eom_coeff(i, j, k);
                if (c.is_zero()) continue;
                e += (FieldExpression::symbol(SymKind::A, j, dim_) *
                      FieldExpression::symbol(SymKind::S, i, dim_)) *
                     (c * w);
            }
        }
        eq.emplace(k, std::move(e));
    }
    return eq;
}

FieldExpression GaugeContext::del_term(const ChartCharacter& g, int i) {
    auto [k, m] = CalculusContext::unflat(i);
    AlgebraElement pre = calc_.section_inverse(calc_.harmonic(k, m));
    Tensor d = comultiply(pre);
    ChartFn coeff;
    for (auto& [key, c] : d.terms()) {
        auto [km, kc] = antipode_mono(key[0]);
        ChartFn g1 = g.eval(km);
        if (g1.is_zero()) continue;
        ChartFn g2 = g.eval(key[1]);
        if (g2.is_zero()) continue;
        coeff += g1 * chart_ddt(g2) * chart_const(c * kc);
    }
    return FieldExpression::symbol(SymKind::Dt, 0, dim_) * coeff;
}

LocalConnection GaugeContext::gauge_transform(const LocalConnection& a,
                                              const ChartCharacter& g) {
    LocalConnection out;
    out.cutoff = a.cutoff;
    out.dim = a.dim;
    out.hermitian = a.hermitian;
    for (auto& [i, ai] : a.value) {
        auto [k, m] = CalculusContext::unflat(i);
        const auto& C = calc_.coaction_matrix(k);
        FieldExpression acc(dim_);
        for (int l = 0; l < 2 * k + 1; ++l) {
            ChartFn gc = chart_char_eval(g, C[l][m + k]);
            if (gc.is_zero()) continue;
            acc += a.at(CalculusContext::flat(k, l - k)) * gc;
        }
        acc += del_term(g, i);
        out.value.emplace(i, std::move(acc));
    }
    return out;
}

std::map<int, FieldExpression> GaugeContext::covariant_transform(
    const std::map<int, FieldExpression>& f, const ChartCharacter& g) {
    std::map<int, FieldExpression> out;
    for (auto& [i, fi] : f) {
        auto [k, m] = CalculusContext::unflat(i);
        const auto& C = calc_.coaction_matrix(k);
        FieldExpression acc(dim_);
        for (int l = 0; l < 2 * k + 1; ++l) {
            ChartFn gc = chart_char_eval(g, C[l][m + k]);
            if (gc.is_zero()) continue;
            acc += f.at(CalculusContext::flat(k, l - k)) * gc;
        }
        out.emplace(i, std::move(acc));
    }
    return out;
}

bool GaugeContext::quantum_invariance_check() {
    for (int k = 0; k <= calc_.cutoff(); ++k) {
        const auto& C = calc_.coaction_matrix(k);
        int d = 2 * k + 1;
        for (int l = 0; l < d; ++l)
            for (int n = 0; n < d; ++n) {
                AlgebraElement acc;
                for (int kk = 0; kk < d; ++kk) {
                    MuScalar w = calc_.harmonic_scale2(k, kk - k);
                    acc += C[l][kk] * star(C[n][kk]) * w;
                }
                AlgebraElement expect;
                if (l == n)
                    expect = AlgebraElement(calc_.harmonic_scale2(k, l - k));
                if (!(acc == expect)) return false;
            }
    }
    return true;
}

bool GaugeContext::singlet_decoupling_check() {
    auto f = curvature(free_connection());
    for (auto& [i, fi] : f) {
        if (i == 0) continue;
        for (auto& [term, c] : fi.terms())
            for (auto& s : term)
                if (s.kind == SymKind::A && s.index == 0) return false;
    }
    return true;
}

std::pair<LocalConnection, LocalConnection> GaugeContext::split_connection(
    const LocalConnection& a) {
    // nu on the engine basis; nu(eps) = (mu^2-1)/2 is nonzero for admissible mu
    InvariantForm eps = calc_.epsilon_form();
    MuScalar nu_eps = calc_.nu(eps);
    if (nu_eps.is_zero()) throw SolveError("nu(eps) vanished: scalar bug");
    FormCoords eps_coords = calc_.coords(eps.q_rep);

    LocalConnection cl, perp;
    cl.cutoff = perp.cutoff = a.cutoff;
    cl.dim = perp.dim = a.dim;
    cl.hermitian = perp.hermitian = a.hermitian;
    // A_cl(theta) = (nu(theta)/nu(eps)) A(eps-combination); the classical part
    // is supported on the nu-complement of ker(nu), i.e. determined by A on
    // the eps direction through nu.
    // Compute A(eps) = sum_i eps_i A(i):
    FieldExpression a_eps(dim_);
    for (auto& [i, s] : eps_coords) a_eps += a.at(i) * s;
    for (auto& [i, ai] : a.value) {
        auto [k, m] = CalculusContext::unflat(i);
        InvariantForm zi = calc_.form_from_q(calc_.harmonic(k, m));
        MuScalar c = calc_.nu(zi) / nu_eps;
        FieldExpression acl = a_eps * c;
        cl.value.emplace(i, acl);
        perp.value.emplace(i, ai - acl);
    }
    return {cl, perp};
}

// --- envelope model -------------------------------------------------------------

namespace {
constexpr int kPairBase = 1 << 20;
}

int BetaEngine::slot_degree(const EnvSlot& s) {
    if (s.form < 0) return 0;
    return s.form >= kPairBase ? 2 : 1;
}

BetaEngine::BetaEngine(GaugeContext& g) : g_(g), pair_base_(kPairBase) {}

std::vector<std::pair<int, MuScalar>> BetaEngine::wedge_pair(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = wedge_cache_.find(key);
    if (it != wedge_cache_.end()) return it->second;
    Tensor2Form t;
    t.add(i, j, MuScalar(1));
    Wedge2Form w = g_.calculus().wedge2_reduce(t);
    std::vector<std::pair<int, MuScalar>> out;
    int ext_flat = (g_.calculus().ext_cutoff() + 1) * (g_.calculus().ext_cutoff() + 1);
    for (auto& [ij, c] : w.rep.terms)
        out.emplace_back(kPairBase + ij.first * ext_flat + ij.second, c);
    wedge_cache_.emplace(key, out);
    return out;
}

std::vector<std::pair<int, MuScalar>> BetaEngine::d_theta(int i) {
    auto it = dtheta_cache_.find(i);
    if (it != dtheta_cache_.end()) return it->second;
    auto [k, m] = CalculusContext::unflat(i);
    Wedge2Form w = g_.calculus().d_inv(
        g_.calculus().form_from_q(g_.calculus().harmonic(k, m)));
    std::vector<std::pair<int, MuScalar>> out;
    int ext_flat = (g_.calculus().ext_cutoff() + 1) * (g_.calculus().ext_cutoff() + 1);
    for (auto& [ij, c] : w.rep.terms)
        out.emplace_back(kPairBase + ij.first * ext_flat + ij.second, c);
    dtheta_cache_.emplace(i, out);
    return out;
}

FormCoords BetaEngine::circ_coords(int i, const Monomial& mo) {
    auto key = std::make_pair(i, mo);
    auto it = circ_cache_.find(key);
    if (it != circ_cache_.end()) return it->second;
    auto [k, m] = CalculusContext::unflat(i);
    InvariantForm f = g_.calculus().form_from_q(g_.calculus().harmonic(k, m));
    InvariantForm res = g_.calculus().circ_action(f, AlgebraElement::monomial(mo));
    FormCoords out = res.is_zero() ? FormCoords{} : g_.calculus().coords(res.q_rep);
    circ_cache_.emplace(key, out);
    return out;
}

void BetaExpr::add(const EnvSlot& mid, const EnvSlot& last, const FieldExpression& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = t_.try_emplace({mid, last}, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) t_.erase(it);
    }
}

bool BetaExpr::is_zero() const { return t_.empty(); }

bool BetaExpr::operator==(const BetaExpr& o) const { return t_ == o.t_; }

BetaExpr BetaExpr::operator+(const BetaExpr& o) const {
    BetaExpr r(*this);
    for (auto& [k, f] : o.t_) r.add(k.first, k.second, f);
    return r;
}

BetaExpr BetaExpr::operator-(const BetaExpr& o) const {
    BetaExpr r(*this);
    for (auto& [k, f] : o.t_) r.add(k.first, k.second, -f);
    return r;
}

std::vector<std::pair<EnvSlot, MuScalar>> BetaEngine::slot_mul(const EnvSlot& a,
                                                               const EnvSlot& b) {
    std::vector<std::pair<EnvSlot, MuScalar>> out;
    int da = slot_degree(a), db = slot_degree(b);
    if (da + db > 2) throw Error("envelope model restricted to degree <= 2 slots");
    if (db == 0) {
        if (da == 0) {
            AlgebraElement p = mono_mul(a.alg, b.alg);
            for (auto& [mo, c] : p.terms()) out.push_back({EnvSlot{mo, -1}, c});
            return out;
        }
        // (x theta) b = x sum b(1) (theta o b(2)); for degree 2 move both legs
        if (da == 1) {
            Tensor d = comultiply(AlgebraElement::monomial(b.alg));
            for (auto& [key, c] : d.terms()) {
                FormCoords fc = circ_coords(a.form, key[1]);
                AlgebraElement head = mono_mul(a.alg, key[0]);
                for (auto& [l, s] : fc)
                    for (auto& [mo, hc] : head.terms())
                        out.push_back({EnvSlot{mo, l}, c * s * hc});
            }
            return out;
        }
        // degree-2 form part: decode the reduced pair and move it across b
        int ext_flat = (g_.calculus().ext_cutoff() + 1) * (g_.calculus().ext_cutoff() + 1);
        int code = a.form - kPairBase;
        int i = code / ext_flat, j = code % ext_flat;
        Tensor d3 = comultiply_iter(AlgebraElement::monomial(b.alg), 3);
        std::map<std::pair<Monomial, std::pair<int, int>>, MuScalar> acc;
        for (auto& [key, c] : d3.terms()) {
            FormCoords f1 = circ_coords(i, key[1]);
            if (f1.empty()) continue;
            FormCoords f2 = circ_coords(j, key[2]);
            if (f2.empty()) continue;
            AlgebraElement head = mono_mul(a.alg, key[0]);
            for (auto& [l1, s1] : f1)
                for (auto& [l2, s2] : f2)
                    for (auto& [mo, hc] : head.terms()) {
                        MuScalar v = c * s1 * s2 * hc;
                        auto k2 = std::make_pair(mo, std::make_pair(l1, l2));
                        acc[k2] += v;
                    }
        }
        for (auto& [k2, v] : acc) {
            if (v.is_zero()) continue;
            for (auto& [code2, c2] : wedge_pair(k2.second.first, k2.second.second))
                out.push_back({EnvSlot{k2.first, code2}, v * c2});
        }
        return out;
    }
    if (db == 1) {
        if (da == 0) {
            AlgebraElement p = mono_mul(a.alg, b.alg);
            for (auto& [mo, c] : p.terms()) out.push_back({EnvSlot{mo, b.form}, c});
            return out;
        }
        // (x theta_i)(y theta_j):  move theta_i across y, then pair with theta_j
        Tensor d = comultiply(AlgebraElement::monomial(b.alg));
        for (auto& [key, c] : d.terms()) {
            FormCoords fc = circ_coords(a.form, key[1]);
            AlgebraElement head = mono_mul(a.alg, key[0]);
            for (auto& [l, s] : fc)
                for (auto& [code2, c2] : wedge_pair(l, b.form))
                    for (auto& [mo, hc] : head.terms())
                        out.push_back({EnvSlot{mo, code2}, c * s * c2 * hc});
        }
        return out;
    }
    // db == 2, da == 0
    AlgebraElement p = mono_mul(a.alg, b.alg);
    for (auto& [mo, c] : p.terms()) out.push_back({EnvSlot{mo, b.form}, c});
    return out;
}

std::vector<std::pair<EnvSlot, MuScalar>> BetaEngine::slot_d(const EnvSlot& a) {
    std::vector<std::pair<EnvSlot, MuScalar>> out;
    int da = slot_degree(a);
    if (da >= 2) throw Error("envelope differential restricted to degree <= 1 slots");
    // d(b) = b(1) pi(b(2))
    Tensor d = comultiply(AlgebraElement::monomial(a.alg));
    if (da == 0) {
        for (auto& [key, c] : d.terms()) {
            FormCoords fc = g_.calculus().coords(rho(key[1]));
            for (auto& [l, s] : fc) out.push_back({EnvSlot{key[0], l}, c * s});
        }
        return out;
    }
    // d(b theta_i) = d(b) theta_i + b d(theta_i)
    for (auto& [key, c] : d.terms()) {
        FormCoords fc = g_.calculus().coords(rho(key[1]));
        for (auto& [l, s] : fc)
            for (auto& [code2, c2] : wedge_pair(l, a.form))
                out.push_back({EnvSlot{key[0], code2}, c * s * c2});
    }
    for (auto& [code2, c2] : d_theta(a.form)) out.push_back({EnvSlot{a.alg, code2}, c2});
    return out;
}

BetaExpr BetaExpr::operator*(const BetaExpr& o) const {
    // cells of a homogeneous BetaExpr carry homogeneous field expressions,
    // so the per-cell degree is well defined
    BetaExpr r(e_);
    for (auto& [k1, f1] : t_)
        for (auto& [k2, f2] : o.t_) {
            int dmid1 = BetaEngine::slot_degree(k1.first);
            int dx2 = f2.degree() < 0 ? 0 : f2.degree();
            int dlast = BetaEngine::slot_degree(k1.second);
            int dmid2 = BetaEngine::slot_degree(k2.first);
            // sign: |w1||x2| + |u1||x2| + |u1||w2|
            int sign = dmid1 * dx2 + dlast * dx2 + dlast * dmid2;
            FieldExpression fx = f1 * f2;
            if (sign % 2) fx = -fx;
            if (fx.is_zero()) continue;
            for (auto& [mid, cm] : e_->slot_mul(k1.first, k2.first))
                for (auto& [last, cl] : e_->slot_mul(k1.second, k2.second)) {
                    r.add(mid, last, fx * (cm * cl));
                }
        }
    return r;
}

BetaExpr BetaExpr::d() const {
    BetaExpr r(e_);
    for (auto& [k, f] : t_) {
        int dx = f.degree() < 0 ? 0 : f.degree();
        int dmid = BetaEngine::slot_degree(k.first);
        // field slot
        FieldExpression df = f.d();
        if (!df.is_zero()) r.add(k.first, k.second, df);
        // middle slot
        {
            FieldExpression fx = (dx % 2) ? -f : f;
            for (auto& [mid, c] : e_->slot_d(k.first)) r.add(mid, k.second, fx * c);
        }
        // last slot
        {
            FieldExpression fx = ((dx + dmid) % 2) ? -f : f;
            for (auto& [last, c] : e_->slot_d(k.second)) r.add(k.first, last, fx * c);
        }
    }
    return r;
}

ContractedBeta BetaExpr::contract_middle(const ChartCharacter& g) const {
    ContractedBeta out;
    GaugeContext& gc = e_->gauge();
    for (auto& [k, f] : t_) {
        const EnvSlot& mid = k.first;
        FieldExpression val(f.dim());
        if (mid.form < 0) {
            ChartFn gv = g.eval(mid.alg);
            if (gv.is_zero()) continue;
            val = f * gv;
        } else if (mid.form < kPairBase) {
            ChartFn gv = g.eval(mid.alg);
            if (gv.is_zero()) continue;
            val = f * gc.del_term(g, mid.form) * gv;
        } else {
            throw Error("character contraction restricted to middle degree <= 1");
        }
        if (val.is_zero()) continue;
        auto [it, fresh] = out.try_emplace(k.second, val);
        if (!fresh) {
            it->second += val;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

std::map<int, BetaExpr> BetaEngine::beta_connection(const LocalConnection& a) {
    std::map<int, BetaExpr> out;
    CalculusContext& calc = g_.calculus();
    for (auto& [i, ai] : a.value) {
        auto [k, m] = CalculusContext::unflat(i);
        const auto& C = calc.coaction_matrix(k);
        BetaExpr b(this);
        // 1_U (x) 1 (x) theta_i
        b.add(EnvSlot{Monomial::one(), -1}, EnvSlot{Monomial::one(), i},
              FieldExpression::scalar(ChartFn(1), a.dim));
        for (int l = 0; l < 2 * k + 1; ++l) {
            const AlgebraElement& c = C[l][m + k];
            if (c.is_zero()) continue;
            int il = CalculusContext::flat(k, l - k);
            // A(theta_l) (x) c(1) (x) c(2)
            Tensor dc = comultiply(c);
            for (auto& [key, cc] : dc.terms())
                b.add(EnvSlot{key[0], -1}, EnvSlot{key[1], -1}, a.at(il) * chart_const(cc));
            // 1_U (x) theta_l (x) c
            for (auto& [mo, cc] : c.terms())
                b.add(EnvSlot{Monomial::one(), il}, EnvSlot{mo, -1},
                      FieldExpression::scalar(chart_const(cc), a.dim));
        }
        out.emplace(i, std::move(b));
    }
    return out;
}

std::map<int, BetaExpr> BetaEngine::beta_curvature(const std::map<int, FieldExpression>& f) {
    std::map<int, BetaExpr> out;
    CalculusContext& calc = g_.calculus();
    for (auto& [i, fi] : f) {
        auto [k, m] = CalculusContext::unflat(i);
        const auto& C = calc.coaction_matrix(k);
        BetaExpr b(this);
        for (int l = 0; l < 2 * k + 1; ++l) {
            const AlgebraElement& c = C[l][m + k];
            if (c.is_zero()) continue;
            Tensor dc = comultiply(c);
            for (auto& [key, cc] : dc.terms())
                b.add(EnvSlot{key[0], -1}, EnvSlot{key[1], -1},
                      f.at(CalculusContext::flat(k, l - k)) * chart_const(cc));
        }
        out.emplace(i, std::move(b));
    }
    return out;
}

BetaExpr BetaEngine::bracket(const std::map<int, BetaExpr>& phi,
                             const std::map<int, BetaExpr>& psi, int i) {
    const Tensor2Form& d = g_.calculus().delta_basis(i);
    BetaExpr r(this);
    for (auto& [jl, c] : d.terms) {
        BetaExpr prod = phi.at(jl.first) * psi.at(jl.second);
        for (auto& [key, f] : prod.terms()) r.add(key.first, key.second, f * c);
    }
    return r;
}

}  // namespace qsu2
