#include "qsu2/random.hpp"

namespace qsu2 {

long Rng::range(long lo, long hi) {
    return lo + (long)(g_() % (uint64_t)(hi - lo + 1));
}

Rat Rng::rat(long maxnum, long maxden) {
    Rat r(range(-maxnum, maxnum), range(1, maxden));
    r.canonicalize();
    return r;
}

Rat Rng::nonzero_rat(long maxnum, long maxden) {
    Rat r = rat(maxnum, maxden);
    while (r == 0) r = rat(maxnum, maxden);
    return r;
}

GaussRat Rng::gauss(long maxnum) { return GaussRat(rat(maxnum), rat(maxnum)); }

MuScalar Rng::scalar(int maxdeg) {
    std::vector<GaussRat> c(range(1, maxdeg + 1));
    for (auto& x : c) x = gauss();
    return MuScalar(MuPoly(std::move(c)));
}

MuScalar Rng::scalar_nonzero(int maxdeg) {
    MuScalar s = scalar(maxdeg);
    while (s.is_zero()) s = scalar(maxdeg);
    return s;
}

Monomial Rng::monomial(int maxdeg) {
    int d = (int)range(0, maxdeg);
    int a = (int)range(0, d);
    int m = (int)range(0, d - a);
    int n = d - a - m;
    Monomial mo;
    mo.branch = (a > 0 && range(0, 1)) ? 1 : 0;
    mo.a = a;
    mo.m = m;
    mo.n = n;
    return mo;
}

AlgebraElement Rng::element(int maxdeg, int terms) {
    AlgebraElement e;
    for (int i = 0; i < terms; ++i) e.add_term(monomial(maxdeg), scalar());
    return e;
}

AlgebraElement Rng::kernel_eps_element(int maxdeg, int terms) {
    AlgebraElement e = element(maxdeg, terms);
    MuScalar c = counit(e);
    if (!c.is_zero()) e -= AlgebraElement(c);
    return e;
}

XPoly Rng::xpoly(int maxdeg, int coeff_deg) {
    std::vector<MuScalar> c(range(1, maxdeg + 1));
    for (auto& x : c) x = scalar(coeff_deg);
    return XPoly(std::move(c));
}

Character Rng::character() {
    // unit-modulus value (c + i)/(c - i) for a rational c, optionally mu-dependent
    Rat c = nonzero_rat();
    MuScalar num = ms_rat(c) + ms_i();
    MuScalar den = ms_rat(c) - ms_i();
    if (range(0, 1)) {
        num += ms_mu();
        den += ms_mu();
    }
    MuScalar z = num / den;
    return Character(z, conj(z));
}

ChartCharacter Rng::chart_character(int factors) {
    ChartFn z(1);
    for (int i = 0; i < factors; ++i) {
        Rat c = nonzero_rat();
        ChartFn num(Poly<MuScalar>{std::vector<MuScalar>{ms_rat(c), ms_i()}});
        ChartFn den(Poly<MuScalar>{std::vector<MuScalar>{ms_rat(c), -ms_i()}});
        z *= (range(0, 1) ? num / den : den / num);
    }
    return ChartCharacter(z, conj(z));
}

ChartFn Rng::chart_fn(int maxdeg) {
    std::vector<MuScalar> c(range(1, maxdeg + 1));
    for (auto& x : c) x = scalar(1);
    ChartFn f{Poly<MuScalar>(std::move(c))};
    return f;
}

}  // namespace qsu2
