#include "qsu2/calculus.hpp"

#include <algorithm>
#include <sstream>

namespace qsu2 {

Tensor2Form Tensor2Form::operator+(const Tensor2Form& o) const {
    Tensor2Form r(*this);
    for (auto& [k, c] : o.terms) r.add(k.first, k.second, c);
    return r;
}
Tensor2Form Tensor2Form::operator-(const Tensor2Form& o) const {
    Tensor2Form r(*this);
    for (auto& [k, c] : o.terms) r.add(k.first, k.second, -c);
    return r;
}
Tensor2Form Tensor2Form::operator*(const MuScalar& s) const {
    Tensor2Form r;
    if (s.is_zero()) return r;
    for (auto& [k, c] : terms) r.add(k.first, k.second, c * s);
    return r;
}

std::pair<int, int> CalculusContext::unflat(int i) {
    int k = 0;
    while ((k + 1) * (k + 1) <= i) ++k;
    return {k, i - k * k - k};
}

std::pair<int, int> CalculusContext::spin_of_pair(const std::pair<int, int>& ij) {
    return {unflat(ij.first).first, unflat(ij.second).first};
}

CalculusContext::CalculusContext(int spin_cutoff)
    : cutoff_(spin_cutoff), ext_(spin_cutoff + 2) {
    if (spin_cutoff < 0) throw RangeError("spin cutoff must be >= 0");
    build_harmonics();
}

XPoly CalculusContext::zonal_poly(int k) const {
    // q_k(x) = (-)^k d^k [ x^k prod_{j=1..k} (1 - mu^(1-j) x) ], d the
    // quantum derivative; the positive normalization constant is kept apart.
    XPoly p = XPoly::monomial(k, MuScalar(1));
    for (int j = 1; j <= k; ++j) {
        XPoly f{std::vector<MuScalar>{MuScalar(1), -ms_mu_pow(1 - j)}};
        p = p * f;
    }
    p = qderiv_n(p, k);
    if (k % 2) p = -p;
    return p;
}

void CalculusContext::build_harmonics() {
    AlgebraElement gg = AlgebraElement::monomial(Monomial{0, 0, 1, 1});
    harm_.resize((ext_ + 1) * (ext_ + 1));
    for (int k = 0; k <= ext_; ++k) {
        XPoly qk = zonal_poly(k);
        for (int m = -k; m <= k; ++m) {
            int am = std::abs(m);
            XPoly dq = qderiv_n(qk, am);
            AlgebraElement radial = xpoly_at(dq, gg);
            AlgebraElement v;
            if (m >= 0) {
                AlgebraElement gm = AlgebraElement::monomial(Monomial{0, 0, am, 0});
                AlgebraElement amm = AlgebraElement::monomial(Monomial{0, am, 0, 0});
                v = radial * gm * amm;
                v = v * ms_mu_pow((long)k * m - m);
                if (am % 2) v = -v;
            } else {
                AlgebraElement asm_ =
                    AlgebraElement::monomial(Monomial{1, am, 0, 0});
                AlgebraElement gsm = AlgebraElement::monomial(Monomial{0, 0, 0, am});
                v = asm_ * gsm * radial;
                v = v * ms_mu_pow((long)k * am);
            }
            harm_[flat(k, m)] = v;
        }
    }
    // coordinate solver over Q-monomials
    for (auto& h : harm_) qix_.vectorize(h);
    harm_solver_ = std::make_unique<ExpressSolver>(qix_.size());
    for (auto& h : harm_) harm_solver_->add(qix_.vectorize_fixed(h));
    if (harm_solver_->rank() != harm_.size())
        throw SolveError("harmonics are not linearly independent");
}

const AlgebraElement& CalculusContext::harmonic(int k, int m) {
    if (std::abs(m) > k) throw RangeError("harmonic requires |m| <= k");
    if (k > ext_) throw CutoffError("harmonic beyond spin cutoff");
    return harm_[flat(k, m)];
}

MuScalar CalculusContext::zonal_norm2(int k) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    auto it = zonal_norm2_.find(k);
    if (it != zonal_norm2_.end()) return it->second;
    const AlgebraElement& z = harmonic(k, 0);
    AlgebraElement arg = star(z) * z;
    hopf_.haar().ensure(std::max(0, arg.degree()));
    MuScalar n = hopf_.haar()(arg);
    zonal_norm2_.emplace(k, n);
    return n;
}

MuScalar CalculusContext::harmonic_scale2(int k, int m) {
    int am = std::abs(m);
    return qfact(k - am) / qfact(k + am) / zonal_norm2(k);
}

FormCoords CalculusContext::coords(const AlgebraElement& q_elem) {
    Vec v;
    try {
        v = qix_.vectorize_fixed(q_elem);
    } catch (const Error&) {
        throw CutoffError("element outside the harmonic span at this cutoff");
    }
    auto x = harm_solver_->express(v);
    if (!x) throw CutoffError("element outside the harmonic span at this cutoff");
    FormCoords c;
    for (size_t i = 0; i < x->size(); ++i)
        if (!(*x)[i].is_zero()) c[(int)i] = (*x)[i];
    return c;
}

AlgebraElement CalculusContext::from_coords(const FormCoords& c) {
    AlgebraElement e;
    for (auto& [i, s] : c) e += harm_[i] * s;
    return e;
}

InvariantForm CalculusContext::pi_project(const AlgebraElement& a) {
    return InvariantForm{rho(a), a};
}

InvariantForm CalculusContext::form_from_q(AlgebraElement q_rep) {
    return InvariantForm{std::move(q_rep), std::nullopt};
}

InvariantForm CalculusContext::epsilon_form() {
    AlgebraElement a;
    a.add_term(Monomial::gen(Gen::A), ms_mu() * ms_mu());
    a.add_term(Monomial::gen(Gen::As), MuScalar(1));
    return pi_project(a);
}
InvariantForm CalculusContext::eta_plus_form() {
    return pi_project(AlgebraElement::generator(Gen::G));
}
InvariantForm CalculusContext::eta_form() {
    AlgebraElement a;
    a.add_term(Monomial::gen(Gen::A), MuScalar(1));
    a.add_term(Monomial::gen(Gen::As), MuScalar(-1));
    return pi_project(a);
}
InvariantForm CalculusContext::eta_minus_form() {
    return pi_project(AlgebraElement::generator(Gen::Gs));
}

AlgebraElement CalculusContext::section_inverse(const AlgebraElement& q_rep) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    FormCoords target = coords(q_rep);
    int maxk = 0;
    for (auto& [i, c] : target) maxk = std::max(maxk, unflat(i).first);
    auto coords_to_vec = [&](const FormCoords& c) {
        Vec v(flat_size());
        for (auto& [i, s] : c) {
            if (i >= flat_size()) throw CutoffError("section solve beyond cutoff");
            v[i] = s;
        }
        return v;
    };
    auto it = section_solver_.find(maxk);
    if (it == section_solver_.end()) {
        SectionSolver ss;
        ss.ells.push_back(rhat_generator());
        for (int k = 1; k <= maxk; ++k)
            for (auto& e : hopf_.section_subspace(k)) ss.ells.push_back(e);
        ss.solver = std::make_unique<ExpressSolver>(flat_size());
        for (auto& e : ss.ells) ss.solver->add(coords_to_vec(coords(rho(e))));
        if (ss.solver->rank() != ss.ells.size())
            throw SolveError("section basis maps non-injectively: cutoff or basis bug");
        it = section_solver_.emplace(maxk, std::move(ss)).first;
    }
    auto x = it->second.solver->express(coords_to_vec(target));
    if (!x) throw SolveError("section inverse failed: cutoff or basis bug");
    AlgebraElement out;
    for (size_t i = 0; i < it->second.ells.size(); ++i)
        if (!(*x)[i].is_zero()) out += it->second.ells[i] * (*x)[i];
    return out;
}

const AlgebraElement& CalculusContext::basis_preimage(int i) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    auto it = preimage_cache_.find(i);
    if (it != preimage_cache_.end()) return it->second;
    AlgebraElement pre = section_inverse(harm_.at(i));
    return preimage_cache_.emplace(i, std::move(pre)).first->second;
}

const std::map<int, AlgebraElement>& CalculusContext::omega_basis(int i) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    auto it = omega_cache_.find(i);
    if (it != omega_cache_.end()) return it->second;
    auto [k, m] = unflat(i);
    auto out = omega_coaction(form_from_q(harm_.at(i)));
    (void)k;
    (void)m;
    return omega_cache_.emplace(i, std::move(out)).first->second;
}

AlgebraElement CalculusContext::preimage_of(const InvariantForm& f) {
    if (f.preimage) return *f.preimage;
    // fast path: linear combinations resolve through the cached basis preimages
    FormCoords c = coords(f.q_rep);
    AlgebraElement out;
    for (auto& [i, s] : c) {
        if (i >= flat_size()) return section_inverse(f.q_rep);
        out += basis_preimage(i) * s;
    }
    return out;
}

InvariantForm CalculusContext::circ_action(const InvariantForm& f, const AlgebraElement& b) {
    AlgebraElement a = preimage_of(f);
    AlgebraElement shifted = a - AlgebraElement(counit(a));
    return pi_project(shifted * b);
}

InvariantForm CalculusContext::star_form(const InvariantForm& f) {
    AlgebraElement a = preimage_of(f);
    AlgebraElement b = -star(antipode(a));
    return pi_project(b);
}

InvariantForm CalculusContext::varkappa(const InvariantForm& f) {
    AlgebraElement a = preimage_of(f);
    return pi_project(-antipode_sq(a));
}

std::map<int, AlgebraElement> CalculusContext::omega_coaction(const InvariantForm& f) {
    // varpi corresponds to Delta on the Q-representative
    Tensor d = comultiply(f.q_rep);
    std::map<Monomial, AlgebraElement> by_second;
    for (auto& [k, c] : d.terms()) by_second[k[1]].add_term(k[0], c);
    std::map<int, AlgebraElement> out;
    for (auto& [leg, first] : by_second) {
        FormCoords fc = coords(first);
        for (auto& [i, s] : fc) out[i].add_term(leg, s);
    }
    return out;
}

std::map<int, AlgebraElement> CalculusContext::omega_coaction_via_ad(const InvariantForm& f) {
    AlgebraElement a = preimage_of(f);
    Tensor ad = adjoint(a);
    // (pi (x) id) ad(a)
    std::map<Monomial, AlgebraElement> by_second;
    for (auto& [k, c] : ad.terms()) by_second[k[1]].add_term(k[0], c);
    std::map<int, AlgebraElement> out;
    for (auto& [leg, first] : by_second) {
        FormCoords fc = coords(rho(first));
        for (auto& [i, s] : fc) out[i].add_term(leg, s);
    }
    // drop zero entries
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

const std::vector<std::vector<AlgebraElement>>& CalculusContext::coaction_matrix(int k) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    auto it = coact_.find(k);
    if (it != coact_.end()) return it->second;
    if (k > cutoff_) throw CutoffError("coaction matrix beyond spin cutoff");
    int d = 2 * k + 1;
    std::vector<std::vector<AlgebraElement>> C(d, std::vector<AlgebraElement>(d));
    for (int m = -k; m <= k; ++m) {
        Tensor dd = comultiply(harmonic(k, m));
        std::map<Monomial, AlgebraElement> by_second;
        for (auto& [key, c] : dd.terms()) by_second[key[1]].add_term(key[0], c);
        for (auto& [leg, first] : by_second) {
            FormCoords fc = coords(first);
            for (auto& [i, s] : fc) {
                auto [ki, mi] = unflat(i);
                if (ki != k)
                    throw SolveError("coaction does not close on the multiplet");
                C[mi + k][m + k].add_term(leg, s);
            }
        }
    }
    return coact_.emplace(k, std::move(C)).first->second;
}

FormCoords CalculusContext::coords_of_rho(const Monomial& mo) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    auto it = rho_coords_.find(mo);
    if (it != rho_coords_.end()) return it->second;
    FormCoords c = coords(rho(mo));
    rho_coords_.emplace(mo, c);
    return c;
}

Tensor2Form CalculusContext::embedded_differential(const InvariantForm& f) {
    AlgebraElement ell = section_inverse(f.q_rep);
    Tensor d = comultiply(ell);
    Tensor2Form out;
    for (auto& [key, c] : d.terms()) {
        FormCoords c1 = coords_of_rho(key[0]);
        if (c1.empty()) continue;
        FormCoords c2 = coords_of_rho(key[1]);
        if (c2.empty()) continue;
        for (auto& [i, si] : c1)
            for (auto& [j, sj] : c2) out.add(i, j, -(c * si * sj));
    }
    return out;
}

const Tensor2Form& CalculusContext::delta_basis(int i) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    auto it = delta_cache_.find(i);
    if (it != delta_cache_.end()) return it->second;
    Tensor2Form d = embedded_differential(form_from_q(harm_.at(i)));
    return delta_cache_.emplace(i, std::move(d)).first->second;
}

const std::map<std::tuple<int, int, int>, MuScalar>& CalculusContext::structure_constants() {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    if (dtable_ready_) return dtable_;
    for (int idx = 0; idx < flat_size(); ++idx) {
        const Tensor2Form& d = delta_basis(idx);
        for (auto& [ij, c] : d.terms)
            dtable_[{ij.first, ij.second, idx}] = c * MuScalar(-2);
    }
    dtable_ready_ = true;
    return dtable_;
}

MuScalar CalculusContext::d_coeff(int i, int j, int k) {
    structure_constants();
    auto it = dtable_.find({i, j, k});
    return it == dtable_.end() ? MuScalar() : it->second;
}

MuScalar CalculusContext::eom_coeff(int i, int j, int k) {
    // (d^{jk}_i - d^{kj}_i)/2
    Rat half(1, 2);
    return (d_coeff(j, k, i) - d_coeff(k, j, i)) * ms_rat(half);
}

void CalculusContext::build_wedge() {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    if (wedge_rel_) return;
    // Relation space generated by (pi (x) pi) Delta(r x) for x spanning
    // ker(eps) up to degree cutoff+1; legs then reach at most spin ext_.
    int ext_flat = (ext_ + 1) * (ext_ + 1);
    auto enc = [&](int i, int j) { return (size_t)i * ext_flat + j; };
    wedge_rel_.emplace((size_t)ext_flat * ext_flat);
    wedge_pair_of_col_.clear();
    AlgebraElement r = rhat_generator();
    for (auto& mo : monomial_basis(cutoff_ + 1)) {
        AlgebraElement x = AlgebraElement::monomial(mo);
        MuScalar e = counit(mo);
        if (!e.is_zero()) x -= AlgebraElement(e);
        if (x.is_zero()) continue;
        AlgebraElement gen = r * x;
        Tensor d = comultiply(gen);
        Vec v((size_t)ext_flat * ext_flat);
        bool nonzero = false;
        for (auto& [key, c] : d.terms()) {
            FormCoords c1 = coords_of_rho(key[0]);
            if (c1.empty()) continue;
            FormCoords c2 = coords_of_rho(key[1]);
            for (auto& [i, si] : c1)
                for (auto& [j, sj] : c2) {
                    v[enc(i, j)] += c * si * sj;
                    nonzero = true;
                }
        }
        if (nonzero) wedge_rel_->add(std::move(v));
    }
}

const EchelonBasis& CalculusContext::wedge_relations() {
    build_wedge();
    return *wedge_rel_;
}

Wedge2Form CalculusContext::wedge2_reduce(const Tensor2Form& t) {
    build_wedge();
    int ext_flat = (ext_ + 1) * (ext_ + 1);
    Vec v((size_t)ext_flat * ext_flat);
    for (auto& [ij, c] : t.terms) v[(size_t)ij.first * ext_flat + ij.second] = c;
    v = wedge_rel_->reduce(std::move(v));
    Wedge2Form w;
    w.relation_degree = cutoff_ + 2;
    for (size_t idx = 0; idx < v.size(); ++idx)
        if (!v[idx].is_zero())
            w.rep.add((int)(idx / ext_flat), (int)(idx % ext_flat), v[idx]);
    return w;
}

Wedge2Form CalculusContext::d_inv_with_preimage(const AlgebraElement& a) {
    Tensor d = comultiply(a);
    Tensor2Form out;
    for (auto& [key, c] : d.terms()) {
        FormCoords c1 = coords_of_rho(key[0]);
        if (c1.empty()) continue;
        FormCoords c2 = coords_of_rho(key[1]);
        for (auto& [i, si] : c1)
            for (auto& [j, sj] : c2) out.add(i, j, -(c * si * sj));
    }
    return wedge2_reduce(out);
}

Wedge2Form CalculusContext::d_inv(const InvariantForm& f) {
    return d_inv_with_preimage(preimage_of(f));
}

MuScalar CalculusContext::gram_weight(int k, int m) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    if (gramw_.empty()) gramw_.resize(flat_size());
    int idx = flat(k, m);
    if (!gramw_[idx].is_zero()) return gramw_[idx];
    // Solve the invariance condition G_ab 1 = sum_kl G_kl star(C_ka) C_lb on
    // multiplet k; the solution line is normalized at (0,0).
    const auto& C = coaction_matrix(k);
    int d = 2 * k + 1;
    auto gi = [&](int a, int b) { return a * d + b; };
    // rows over monomial coefficients of sum_kl G_kl star(C_ka) C_lb - G_ab 1
    MonoIndexer ix;
    std::vector<std::map<size_t, MuScalar>> sparse;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            std::map<Monomial, std::map<size_t, MuScalar>> rows;  // monomial -> G-coeffs
            for (int kk = 0; kk < d; ++kk)
                for (int ll = 0; ll < d; ++ll) {
                    AlgebraElement prod = star(C[kk][a]) * C[ll][b];
                    for (auto& [mo, c] : prod.terms()) rows[mo][gi(kk, ll)] += c;
                }
            rows[Monomial::one()][gi(a, b)] -= MuScalar(1);
            for (auto& [mo, row] : rows) {
                std::map<size_t, MuScalar> clean;
                for (auto& [col, c] : row)
                    if (!c.is_zero()) clean[col] = c;
                if (!clean.empty()) sparse.push_back(std::move(clean));
            }
        }
    Mat dense;
    for (auto& row : sparse) {
        Vec v(d * d);
        for (auto& [col, c] : row) v[col] = c;
        dense.push_back(std::move(v));
    }
    Mat null = nullspace(dense, d * d);
    if (null.size() != 1)
        throw SolveError("invariant Gram solve is not one-dimensional");
    Vec g = null[0];
    MuScalar norm = g[gi(k, k)];  // the (m=0,m=0) entry
    if (norm.is_zero()) throw SolveError("invariant Gram has zero zonal entry");
    MuScalar inv = norm.inv();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (a == b) continue;
            if (!(g[gi(a, b)].is_zero()))
                throw SolveError("invariant Gram is not diagonal in the harmonic basis");
        }
    for (int m2 = -k; m2 <= k; ++m2) gramw_[flat(k, m2)] = g[gi(m2 + k, m2 + k)] * inv;
    return gramw_[idx];
}

MuScalar CalculusContext::scalar_product(const InvariantForm& a, const InvariantForm& b) {
    FormCoords ca = coords(a.q_rep), cb = coords(b.q_rep);
    MuScalar r;
    for (auto& [i, sa] : ca) {
        auto it = cb.find(i);
        if (it == cb.end()) continue;
        auto [k, m] = unflat(i);
        // (zeta_i, zeta_i) = 1 for the literal basis; engine vectors carry
        // gram weight / scale2 relative to it:  (z~_i, z~_i) = 1/R_i, and the
        // invariant relative weights must agree with gram_weight (tested).
        r += conj(sa) * it->second * harmonic_scale2(k, m).inv();
    }
    return r;
}

const std::vector<std::vector<MuScalar>>& CalculusContext::bar_matrix(int k) {
    std::lock_guard<std::recursive_mutex> lock(rmutex_);
    auto it = bar_.find(k);
    if (it != bar_.end()) return it->second;
    const auto& C = coaction_matrix(k);
    int d = 2 * k + 1;
    auto gi = [&](int a, int b) { return a * d + b; };
    // invariant element E = sum E_ij z_i (x) z_j:
    //   sum_ij E_ij C_li C_mj = E_lm 1 for all l, m
    Mat dense;
    for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m) {
            std::map<Monomial, Vec> bym;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    AlgebraElement prod = C[l][i] * C[m][j];
                    for (auto& [mo, c] : prod.terms()) {
                        auto& v = bym[mo];
                        if (v.empty()) v.assign(d * d, MuScalar());
                        v[gi(i, j)] += c;
                    }
                }
            auto& vone = bym[Monomial::one()];
            if (vone.empty()) vone.assign(d * d, MuScalar());
            vone[gi(l, m)] -= MuScalar(1);
            for (auto& [mo, v] : bym) dense.push_back(v);
        }
    Mat null = nullspace(dense, d * d);
    if (null.size() != 1)
        throw SolveError("invariant element of the multiplet square is not unique");
    Vec e = null[0];
    // bar matrix: B[j][i] = E_ij / W_i with W the gram weights
    std::vector<std::vector<MuScalar>> B(d, std::vector<MuScalar>(d));
    for (int i = 0; i < d; ++i) {
        MuScalar wi = gram_weight(k, i - k);
        for (int j = 0; j < d; ++j) B[j][i] = e[gi(i, j)] / wi;
    }
    // scale so that bar . bar = id: compute P = B conj(B) and divide by sqrt
    std::vector<std::vector<MuScalar>> P(d, std::vector<MuScalar>(d));
    for (int i = 0; i < d; ++i)
        for (int kk = 0; kk < d; ++kk) {
            MuScalar acc;
            for (int j = 0; j < d; ++j) acc += B[kk][j] * conj(B[j][i]);
            P[kk][i] = acc;
        }
    MuScalar s = P[0][0];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!(P[i][j] == (i == j ? s : MuScalar())))
                throw SolveError("bar normalization is not scalar");
    auto root = ms_sqrt(s);
    if (!root) throw SolveError("bar scale is not an exact square");
    MuScalar inv = root->inv();
    for (auto& row : B)
        for (auto& x : row) x *= inv;
    // fix the sign so the zonal diagonal entry is positive at mu = 1/2
    MuScalar diag = B[k][k];
    GaussRat val = eval_at(diag, Rat(1, 2));
    bool flip = false;
    if (!val.is_zero()) {
        flip = val.re < 0;
    } else {
        GaussRat corner = eval_at(B[0][d - 1], Rat(1, 2));
        flip = corner.re < 0;
    }
    if (flip)
        for (auto& row : B)
            for (auto& x : row) x = -x;
    return bar_.emplace(k, std::move(B)).first->second;
}

InvariantForm CalculusContext::conjugation_bar(const InvariantForm& f) {
    FormCoords c = coords(f.q_rep);
    FormCoords out;
    for (auto& [i, s] : c) {
        auto [k, m] = unflat(i);
        const auto& B = bar_matrix(k);
        MuScalar cs = conj(s);
        for (int j = 0; j < 2 * k + 1; ++j) {
            if (B[j][m + k].is_zero()) continue;
            MuScalar add = cs * B[j][m + k];
            auto [it, fresh] = out.try_emplace(flat(k, j - k), add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return form_from_q(from_coords(out));
}

bool CalculusContext::selection_rule_check(int n) {
    if (n > cutoff_) throw CutoffError("selection rule check beyond cutoff");
    for (int m = -n; m <= n; ++m) {
        const Tensor2Form& d = delta_basis(flat(n, m));
        for (auto& [ij, c] : d.terms) {
            auto [i, j] = spin_of_pair(ij);
            if (std::abs(i - j) > n || n > i + j) return false;
        }
    }
    return true;
}

MuScalar CalculusContext::nu(const InvariantForm& f) { return x_functional(preimage_of(f)); }

std::string tensor2_to_string(const Tensor2Form& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [ij, c] : t.terms) {
        if (!first) os << " + ";
        first = false;
        auto [k1, m1] = CalculusContext::unflat(ij.first);
        auto [k2, m2] = CalculusContext::unflat(ij.second);
        os << "(" << ms_to_string(c) << ") z(" << k1 << "," << m1 << ")(x)z(" << k2 << ","
           << m2 << ")";
    }
    return os.str();
}

}  // namespace qsu2
