#include "qsu2/hopf.hpp"

#include <algorithm>

namespace qsu2 {

// --- coproduct ---------------------------------------------------------------

Tensor coproduct_gen(Gen g) {
    Tensor t(2);
    auto M = [](Gen x) { return Monomial::gen(x); };
    switch (g) {
        case Gen::A:
            t.add_term({M(Gen::A), M(Gen::A)}, MuScalar(1));
            t.add_term({M(Gen::Gs), M(Gen::G)}, -ms_mu());
            break;
        case Gen::As:
            t.add_term({M(Gen::As), M(Gen::As)}, MuScalar(1));
            t.add_term({M(Gen::G), M(Gen::Gs)}, -ms_mu());
            break;
        case Gen::G:
            t.add_term({M(Gen::G), M(Gen::A)}, MuScalar(1));
            t.add_term({M(Gen::As), M(Gen::G)}, MuScalar(1));
            break;
        case Gen::Gs:
            t.add_term({M(Gen::A), M(Gen::Gs)}, MuScalar(1));
            t.add_term({M(Gen::Gs), M(Gen::As)}, MuScalar(1));
            break;
    }
    return t;
}

namespace {

std::map<Monomial, Tensor>& coproduct_cache() {
    static std::map<Monomial, Tensor> c;
    return c;
}
std::mutex& hopf_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Tensor comultiply(const Monomial& mo) {
    std::lock_guard<std::mutex> lock(hopf_mutex());
    auto& cache = coproduct_cache();
    auto it = cache.find(mo);
    if (it != cache.end()) return it->second;
    // walk down to the nearest cached ancestor, then multiply back up so every
    // intermediate power lands in the cache
    std::vector<std::pair<Monomial, Gen>> chain;  // (monomial, generator that extends it)
    Monomial cur = mo;
    while (!cache.count(cur) && !cur.is_one()) {
        Monomial base = cur;
        Gen step;
        if (base.n > 0) {
            base.n -= 1;
            step = Gen::Gs;
        } else if (base.m > 0) {
            base.m -= 1;
            step = Gen::G;
        } else {
            base.a -= 1;
            if (base.a == 0) base.branch = 0;
            step = cur.branch ? Gen::As : Gen::A;
        }
        chain.emplace_back(cur, step);
        cur = base;
    }
    if (!cache.count(cur)) cache.emplace(cur, Tensor::one(2));
    Tensor acc = cache.at(cur);
    for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit) {
        acc = acc * coproduct_gen(rit->second);
        cache.emplace(rit->first, acc);
    }
    return acc;
}

Tensor comultiply(const AlgebraElement& a) {
    Tensor r(2);
    for (auto& [mo, c] : a.terms()) r += comultiply(mo) * c;
    return r;
}

Tensor comultiply_iter(const AlgebraElement& a, int legs) {
    Tensor r = Tensor::from_element(a);
    auto cop = [](const Monomial& mo) { return comultiply(mo); };
    for (int i = 1; i < legs; ++i) r = r.expand_slot(0, cop);
    return r;
}

// --- counit, antipode, X, modular automorphism --------------------------------

MuScalar counit(const Monomial& mo) {
    return (mo.m == 0 && mo.n == 0) ? MuScalar(1) : MuScalar();
}

MuScalar counit(const AlgebraElement& a) {
    MuScalar r;
    for (auto& [mo, c] : a.terms())
        if (mo.m == 0 && mo.n == 0) r += c;
    return r;
}

std::pair<Monomial, MuScalar> antipode_mono(const Monomial& mo) {
    // kappa(X^a g^m g*^n) = kappa(g*)^n kappa(g)^m kappa(X)^a with
    // kappa(a) = a*, kappa(a*) = a, kappa(g) = -mu g, kappa(g*) = -mu^-1 g*.
    // The gamma block then moves back across the flipped alpha power:
    // g a* = mu a* g and g a = mu^-1 a g.
    Monomial out;
    out.branch = mo.a ? (mo.branch ? 0 : 1) : 0;
    out.a = mo.a;
    out.m = mo.m;
    out.n = mo.n;
    long pow = mo.m - mo.n;  // generator prefactors
    pow += (out.branch ? 1L : -1L) * (long)(mo.m + mo.n) * mo.a;
    MuScalar c = ms_mu_pow(pow);
    if ((mo.m + mo.n) % 2) c = -c;
    return {out, c};
}

AlgebraElement antipode(const AlgebraElement& a) {
    AlgebraElement r;
    for (auto& [mo, c] : a.terms()) {
        auto [om, oc] = antipode_mono(mo);
        r.add_term(om, c * oc);
    }
    return r;
}

AlgebraElement antipode_sq(const AlgebraElement& a) {
    AlgebraElement r;
    for (auto& [mo, c] : a.terms()) r.add_term(mo, c * ms_mu_pow(2L * (mo.m - mo.n)));
    return r;
}

MuScalar x_functional(const Monomial& mo) {
    if (mo.m != 0 || mo.n != 0) return MuScalar();
    Rat half(1, 2);
    Rat v = half * mo.a;
    return ms_rat(mo.branch ? Rat(-v) : v);
}

MuScalar x_functional(const AlgebraElement& a) {
    MuScalar r;
    for (auto& [mo, c] : a.terms()) r += c * x_functional(mo);
    return r;
}

AlgebraElement modular_j(const AlgebraElement& a) {
    AlgebraElement r;
    for (auto& [mo, c] : a.terms())
        r.add_term(mo, c * ms_mu_pow(mo.branch ? -2L * mo.a : 2L * mo.a));
    return r;
}

// --- adjoint coaction ----------------------------------------------------------

namespace {
std::map<Monomial, Tensor>& adjoint_cache() {
    static std::map<Monomial, Tensor> c;
    return c;
}
std::map<Monomial, AlgebraElement>& rho_cache() {
    static std::map<Monomial, AlgebraElement> c;
    return c;
}
}  // namespace

Tensor adjoint(const Monomial& mo) {
    {
        std::lock_guard<std::mutex> lock(hopf_mutex());
        auto it = adjoint_cache().find(mo);
        if (it != adjoint_cache().end()) return it->second;
    }
    Tensor two = comultiply(mo);
    Tensor three = two.expand_slot(0, [](const Monomial& m) { return comultiply(m); });
    // a(1) (x) a(2) (x) a(3)  ->  a(2) (x) kappa(a(1)) a(3)
    Tensor r(2);
    for (auto& [k, c] : three.terms()) {
        auto [km, kc] = antipode_mono(k[0]);
        AlgebraElement tail = mono_mul(km, k[2]);
        for (auto& [mo2, c2] : tail.terms()) r.add_term({k[1], mo2}, c * kc * c2);
    }
    std::lock_guard<std::mutex> lock(hopf_mutex());
    adjoint_cache().emplace(mo, r);
    return r;
}

Tensor adjoint(const AlgebraElement& a) {
    Tensor r(2);
    for (auto& [mo, c] : a.terms()) r += adjoint(mo) * c;
    return r;
}

AlgebraElement rho(const Monomial& mo) {
    {
        std::lock_guard<std::mutex> lock(hopf_mutex());
        auto it = rho_cache().find(mo);
        if (it != rho_cache().end()) return it->second;
    }
    Tensor ad = adjoint(mo);
    AlgebraElement r;
    for (auto& [k, c] : ad.terms()) {
        MuScalar x = x_functional(k[0]);
        if (!x.is_zero()) r.add_term(k[1], c * x);
    }
    std::lock_guard<std::mutex> lock(hopf_mutex());
    rho_cache().emplace(mo, r);
    return r;
}

AlgebraElement rho(const AlgebraElement& a) {
    AlgebraElement r;
    for (auto& [mo, c] : a.terms()) r += rho(mo) * c;
    return r;
}

AlgebraElement lambda_elem() {
    AlgebraElement r;
    r.add_term(Monomial::gen(Gen::A), ms_mu());
    r.add_term(Monomial::gen(Gen::As), ms_mu_pow(-1));
    return r;
}

AlgebraElement rhat_generator() {
    AlgebraElement r;
    r.add_term(Monomial::gen(Gen::A), ms_mu() * ms_mu());
    r.add_term(Monomial::gen(Gen::As), MuScalar(1));
    r.add_term(Monomial::one(), -(MuScalar(1) + ms_mu() * ms_mu()));
    return r;
}

AlgebraElement xpoly_at(const XPoly& p, const AlgebraElement& x) {
    AlgebraElement acc;
    for (int d = p.degree(); d >= 0; --d) {
        acc = acc * x;
        if (!p.coeff(d).is_zero()) acc += AlgebraElement(p.coeff(d));
    }
    return acc;
}

AlgebraElement xpoly_at_lambda(const XPoly& p) { return xpoly_at(p, lambda_elem()); }

// --- Haar state ----------------------------------------------------------------

std::vector<Monomial> monomial_basis(int maxdeg) {
    std::vector<Monomial> out;
    for (int d = 0; d <= maxdeg; ++d)
        for (int branch = 0; branch <= 1; ++branch)
            for (int a = branch ? 1 : 0; a <= d; ++a)
                for (int m = 0; m + a <= d; ++m) {
                    int n = d - a - m;
                    out.push_back(Monomial{(uint8_t)branch, a, m, n});
                }
    std::sort(out.begin(), out.end());
    return out;
}

int HaarState::cutoff() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cutoff_;
}

void HaarState::ensure(int degree) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (degree <= cutoff_) return;
    auto monos = monomial_basis(degree);

    // split by left weight: the invariance rows couple only equal weights
    std::map<int, std::vector<Monomial>> classes;
    for (auto& mo : monos) classes[mo.left_weight()].push_back(mo);

    std::map<Monomial, MuScalar> table;
    for (auto& [lw, ms] : classes) {
        std::map<Monomial, size_t> col;
        for (size_t i = 0; i < ms.size(); ++i) col[ms[i]] = i;
        EchelonBasis rowspace(ms.size());
        for (auto& mo : ms) {
            Tensor d = comultiply(mo);
            // group by second leg
            std::map<Monomial, Vec> rows;
            for (auto& [k, c] : d.terms()) {
                auto& row = rows[k[1]];
                if (row.empty()) row.assign(ms.size(), MuScalar());
                row[col.at(k[0])] += c;
            }
            for (auto& [leg, row] : rows) {
                Vec r = row;
                if (leg.is_one()) r[col.at(mo)] -= MuScalar(1);
                rowspace.add(std::move(r));
            }
        }
        Mat null;
        {
            // nullspace from the echelon basis
            Mat rows = rowspace.rows();
            null = nullspace(rows, ms.size());
        }
        if (lw != 0) {
            if (!null.empty())
                throw SolveError("Haar invariance system is degenerate off weight zero");
            for (auto& mo : ms) table[mo] = MuScalar();
        } else {
            if (null.size() != 1)
                throw SolveError("Haar invariance system does not have a unique state");
            Vec v = null[0];
            MuScalar at_one = v[col.at(Monomial::one())];
            if (at_one.is_zero()) throw SolveError("Haar solve failed to normalise");
            MuScalar inv = at_one.inv();
            for (size_t i = 0; i < ms.size(); ++i) table[ms[i]] = v[i] * inv;
        }
    }
    h_ = std::move(table);
    cutoff_ = degree;
}

MuScalar HaarState::value(const Monomial& mo) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = h_.find(mo);
    if (it == h_.end())
        throw CutoffError("Haar state queried beyond its degree cutoff");
    return it->second;
}

MuScalar HaarState::operator()(const AlgebraElement& a) const {
    MuScalar r;
    for (auto& [mo, c] : a.terms()) r += c * value(mo);
    return r;
}

MuScalar HaarState::gram(const AlgebraElement& b, const AlgebraElement& a) const {
    return (*this)(star(b) * a);
}

// --- MonoIndexer -----------------------------------------------------------------

size_t MonoIndexer::index(const Monomial& mo) {
    auto it = idx_.find(mo);
    if (it != idx_.end()) return it->second;
    size_t i = order_.size();
    idx_.emplace(mo, i);
    order_.push_back(mo);
    return i;
}

std::optional<size_t> MonoIndexer::find(const Monomial& mo) const {
    auto it = idx_.find(mo);
    if (it == idx_.end()) return std::nullopt;
    return it->second;
}

Vec MonoIndexer::vectorize(const AlgebraElement& a, bool allow_new) {
    if (allow_new)
        for (auto& [mo, c] : a.terms()) index(mo);
    Vec v(order_.size());
    for (auto& [mo, c] : a.terms()) {
        auto i = find(mo);
        if (!i) throw Error("monomial outside indexed space");
        v[*i] = c;
    }
    return v;
}

Vec MonoIndexer::vectorize_fixed(const AlgebraElement& a) const {
    Vec v(order_.size());
    for (auto& [mo, c] : a.terms()) {
        auto i = find(mo);
        if (!i) throw Error("monomial outside indexed space");
        v[*i] = c;
    }
    return v;
}

// --- Peter-Weyl ------------------------------------------------------------------

const std::vector<PeterWeylBlock>& HopfContext::peter_weyl(int nmax) {
    std::lock_guard<std::mutex> lock(mutex_);
    if ((int)blocks_.size() >= nmax) return blocks_;
    if (nmax < 1) throw RangeError("peter_weyl requires nmax >= 1");
    haar_.ensure(2 * (nmax - 1));
    if (blocks_.empty()) blocks_.push_back({1, {AlgebraElement::one()}});
    for (int n = (int)blocks_.size() + 1; n <= nmax; ++n) {
        auto big = monomial_basis(n - 1);
        auto small = monomial_basis(n - 2);
        std::map<Monomial, size_t> col;
        for (size_t i = 0; i < big.size(); ++i) col[big[i]] = i;
        Mat rows;
        for (auto& b : small) {
            AlgebraElement bs = star(AlgebraElement::monomial(b));
            Vec row(big.size());
            for (auto& m : big) row[col.at(m)] = haar_(bs * AlgebraElement::monomial(m));
            rows.push_back(std::move(row));
        }
        Mat null = nullspace(rows, big.size());
        PeterWeylBlock blk;
        blk.n = n;
        for (auto& v : null) {
            AlgebraElement e;
            for (size_t i = 0; i < big.size(); ++i)
                if (!v[i].is_zero()) e.add_term(big[i], v[i]);
            blk.basis.push_back(std::move(e));
        }
        if ((int)blk.basis.size() != n * n)
            throw SolveError("Peter-Weyl block has unexpected dimension");
        blocks_.push_back(std::move(blk));
    }
    return blocks_;
}

AlgebraElement HopfContext::project_block_complement(const AlgebraElement& a, int n) {
    peter_weyl(n - 1);
    haar_.ensure(std::max(2 * (n - 1), a.degree() + (n - 2)));
    AlgebraElement out = a;
    for (int i = 1; i <= n - 1; ++i) {
        const auto& blk = blocks_[i - 1];
        size_t d = blk.basis.size();
        Mat g(d, Vec(d));
        Vec rhs(d);
        for (size_t r = 0; r < d; ++r) {
            for (size_t c = 0; c < d; ++c) g[r][c] = haar_.gram(blk.basis[r], blk.basis[c]);
            rhs[r] = haar_.gram(blk.basis[r], a);
        }
        Vec y = solve_unique(g, rhs);
        for (size_t c = 0; c < d; ++c) out -= blk.basis[c] * y[c];
    }
    return out;
}

std::vector<std::pair<int, XPoly>> HopfContext::primitive_elements(int n) {
    if (n < 1) throw RangeError("primitive_elements requires n >= 1");
    std::vector<std::pair<int, XPoly>> out;
    AlgebraElement lam = lambda_elem();
    for (int k = 0; k <= n - 1; ++k) {
        AlgebraElement v = AlgebraElement::monomial(Monomial{0, 0, k, 0});
        for (int j = 0; j < n - 1 - k; ++j) v = v * lam;  // lambda^(n-1-k) gamma^k
        AlgebraElement xi = project_block_complement(v, n);
        // solve xi = sum_j c_j lambda^j gamma^k
        std::vector<AlgebraElement> cols;
        AlgebraElement acc = AlgebraElement::monomial(Monomial{0, 0, k, 0});
        for (int j = 0; j <= n - 1 - k; ++j) {
            cols.push_back(acc);
            acc = acc * lam;
        }
        MonoIndexer ix;
        for (auto& cvec : cols) ix.vectorize(cvec);
        ix.vectorize(xi);
        ExpressSolver solver(ix.size());
        for (auto& cvec : cols) solver.add(ix.vectorize_fixed(cvec));
        auto coords = solver.express(ix.vectorize_fixed(xi));
        if (!coords)
            throw SolveError("primitive element is not of the form p(lambda) gamma^k");
        XPoly p{std::vector<MuScalar>(coords->begin(), coords->end())};
        if (p.degree() != n - k - 1)
            throw SolveError("primitive polynomial has unexpected degree");
        p = p * p.leading().inv();  // monic: positive leading coefficient
        out.emplace_back(k, std::move(p));
    }
    return out;
}

MuScalar HopfContext::poly_scalar_product(const XPoly& p, const XPoly& q, int k) {
    AlgebraElement pl = star(xpoly_at_lambda(p));
    AlgebraElement ql = xpoly_at_lambda(q);
    AlgebraElement w = AlgebraElement::monomial(Monomial{0, 0, k, k});
    AlgebraElement arg = pl * ql * w;
    haar_.ensure(std::max(0, arg.degree()));
    return haar_(arg);
}

MuScalar HopfContext::poly_scalar_product_a2(const XPoly& p, const XPoly& q, int k) {
    AlgebraElement arg = xpoly_at_lambda(q) *
                         AlgebraElement::monomial(Monomial{0, 0, k, k}) *
                         star(xpoly_at_lambda(p));
    haar_.ensure(std::max(0, arg.degree()));
    return haar_(arg);
}

std::vector<AlgebraElement> HopfContext::ad_orbit_span(const AlgebraElement& seed) {
    Tensor ad = adjoint(seed);
    // ad(seed) = sum b_e (x) e over distinct second-leg monomials e; since the
    // e are independent, the b_e span the smallest invariant subspace
    // containing the seed
    std::map<Monomial, AlgebraElement> by_second;
    for (auto& [k, c] : ad.terms()) by_second[k[1]].add_term(k[0], c);

    MonoIndexer ixfirst;
    for (auto& [leg, first] : by_second) ixfirst.vectorize(first);
    EchelonBasis firsts(ixfirst.size());
    std::vector<AlgebraElement> span;
    for (auto& [leg, first] : by_second)
        if (firsts.add(ixfirst.vectorize_fixed(first))) span.push_back(first);
    return span;
}

const std::vector<AlgebraElement>& HopfContext::section_subspace(int k) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = section_.find(k);
    if (it != section_.end()) return it->second;
    std::vector<AlgebraElement> basis;
    if (k == 0) {
        basis.push_back(rhat_generator());
    } else {
        basis = ad_orbit_span(AlgebraElement::monomial(Monomial{0, 0, k, 0}));
        if ((int)basis.size() != 2 * k + 1)
            throw SolveError("section multiplet has unexpected dimension");
    }
    return section_.emplace(k, std::move(basis)).first->second;
}

std::vector<std::pair<int, AlgebraElement>> HopfContext::mho_decompose(
    const AlgebraElement& a) {
    int d = std::max(0, a.degree());
    // basis lambda^j * ell over ell in {1} + L_k (k >= 1), degree j + deg(ell) <= d
    struct Entry {
        int j, k;
        size_t idx;
        AlgebraElement prod;
        AlgebraElement ell;
    };
    std::vector<Entry> entries;
    AlgebraElement lam = lambda_elem();
    std::vector<AlgebraElement> lampow{AlgebraElement::one()};
    for (int j = 1; j <= d; ++j) lampow.push_back(lampow.back() * lam);
    for (int j = 0; j <= d; ++j)
        entries.push_back({j, 0, 0, lampow[j], AlgebraElement::one()});
    for (int k = 1; k <= d; ++k) {
        const auto& lk = section_subspace(k);
        for (int j = 0; j + k <= d; ++j)
            for (size_t i = 0; i < lk.size(); ++i)
                entries.push_back({j, k, i, lampow[j] * lk[i], lk[i]});
    }
    MonoIndexer ix;
    for (auto& e : entries) ix.vectorize(e.prod);
    Vec target = ix.vectorize(a);
    target.resize(ix.size());
    ExpressSolver solver(ix.size());
    for (auto& e : entries) {
        Vec v = ix.vectorize_fixed(e.prod);
        solver.add(v);
    }
    auto coords = solver.express(target);
    if (!coords) throw SolveError("mho decomposition failed");
    if (solver.rank() != entries.size())
        throw SolveError("mho basis is linearly dependent at this cutoff");
    std::map<int, AlgebraElement> byj;
    for (size_t i = 0; i < entries.size(); ++i) {
        if ((*coords)[i].is_zero()) continue;
        byj[entries[i].j] += entries[i].ell * (*coords)[i];
    }
    std::vector<std::pair<int, AlgebraElement>> out;
    for (auto& [j, e] : byj)
        if (!e.is_zero()) out.emplace_back(j, e);
    return out;
}

}  // namespace qsu2
