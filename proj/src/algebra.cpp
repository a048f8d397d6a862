#include "qsu2/algebra.hpp"

#include <mutex>
#include <sstream>

namespace qsu2 {

MuScalar AlgebraElement::scalar_value() const {
    if (t_.empty()) return MuScalar();
    if (t_.size() == 1 && t_.begin()->first.is_one()) return t_.begin()->second;
    throw Error("element is not a scalar multiple of 1");
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (auto& [mo, c] : t_) r.t_.emplace(mo, -c);
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r(*this);
    return r += o;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r(*this);
    return r -= o;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (auto& [mo, c] : o.t_) add_term(mo, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (auto& [mo, c] : o.t_) add_term(mo, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator*(const MuScalar& s) const {
    AlgebraElement r;
    if (s.is_zero()) return r;
    for (auto& [mo, c] : t_) r.add_term(mo, c * s);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    for (auto& [mx, cx] : t_)
        for (auto& [my, cy] : o.t_) {
            AlgebraElement p = mono_mul(mx, my);
            MuScalar c = cx * cy;
            for (auto& [mo, cp] : p.terms()) r.add_term(mo, cp * c);
        }
    return r;
}

AlgebraElement AlgebraElement::pow(int e) const {
    AlgebraElement r = one();
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

// alpha^p alpha*^q (p,q >= 0), reduced via a a* = 1 - mu^2 g*g:
//   a^p a*^q = a^(p-1) a*^(q-1) (1 - mu^(2q) g*g)
// and its star partner via a* a = 1 - g*g:
//   a*^p a^q = a*^(p-1) a^(q-1) (1 - mu^(-2(q-1)) g*g)
// Memoised bottom-up; the gamma factors commute with the remaining blocks.
static AlgebraElement cross_pow_memo(bool first_is_alpha, int p, int q) {
    static std::map<std::tuple<int, int, int>, AlgebraElement> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_tuple((int)first_is_alpha, p, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // fill all (i,j) with i<=p, j<=q bottom-up
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
            auto k = std::make_tuple((int)first_is_alpha, i, j);
            if (cache.count(k)) continue;
            AlgebraElement val;
            if (i == 0 || j == 0) {
                if (i == 0 && j == 0)
                    val = AlgebraElement::one();
                else if (i == 0)
                    val = AlgebraElement::monomial(
                        Monomial{first_is_alpha ? uint8_t(1) : uint8_t(0), j, 0, 0});
                else
                    val = AlgebraElement::monomial(
                        Monomial{first_is_alpha ? uint8_t(0) : uint8_t(1), i, 0, 0});
            } else {
                const AlgebraElement& base =
                    cache.at(std::make_tuple((int)first_is_alpha, i - 1, j - 1));
                MuScalar factor =
                    first_is_alpha ? ms_mu_pow(2 * j) : ms_mu_pow(-2 * (j - 1));
                for (auto& [mo, c] : base.terms()) {
                    val.add_term(mo, c);
                    Monomial shifted = mo;
                    shifted.m += 1;
                    shifted.n += 1;
                    val.add_term(shifted, -(c * factor));
                }
            }
            cache.emplace(k, std::move(val));
        }
    return cache.at(key);
}

AlgebraElement mono_mul(const Monomial& x, const Monomial& y) {
    // commute the gamma block of x past the alpha block of y:
    //   g a = mu^-1 a g,  g a* = mu a* g   (same for g*)
    long swaps = (long)(x.m + x.n) * y.a;
    MuScalar factor = ms_mu_pow(y.branch ? swaps : -swaps);

    int m = x.m + y.m, n = x.n + y.n;
    AlgebraElement r;
    if (x.a == 0 || y.a == 0 || x.branch == y.branch) {
        Monomial mo;
        mo.branch = x.a ? x.branch : y.branch;
        mo.a = x.a + y.a;
        mo.m = m;
        mo.n = n;
        if (mo.a == 0) mo.branch = 0;
        r.add_term(mo, factor);
        return r;
    }
    AlgebraElement crossed = cross_pow_memo(x.branch == 0, x.a, y.a);
    for (auto& [mo, c] : crossed.terms()) {
        Monomial out = mo;
        out.m += m;
        out.n += n;
        r.add_term(out, c * factor);
    }
    return r;
}

AlgebraElement star(const AlgebraElement& e) {
    // (X^a g^m g*^n)* = g^n g*^m X'^a with X' the opposite branch; moving the
    // gamma block back past X'^a costs mu^(+-(m+n)a).
    AlgebraElement r;
    for (auto& [mo, c] : e.terms()) {
        Monomial out;
        out.branch = mo.a ? (mo.branch ? 0 : 1) : 0;
        out.a = mo.a;
        out.m = mo.n;
        out.n = mo.m;
        long sw = (long)(mo.m + mo.n) * mo.a;
        MuScalar f = ms_mu_pow(mo.branch ? -sw : sw);
        r.add_term(out, conj(c) * f);
    }
    return r;
}

AlgebraElement normal_form(const std::vector<FreeTerm>& terms) {
    AlgebraElement r;
    for (auto& t : terms) {
        AlgebraElement acc(t.coeff);
        for (Gen g : t.word) acc *= AlgebraElement::generator(g);
        r += acc;
    }
    return r;
}

std::string monomial_to_string(const Monomial& mo) {
    if (mo.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* sym, int p) {
        if (p == 0) return;
        if (!first) os << " ";
        first = false;
        os << sym;
        if (p > 1) os << "^" << p;
    };
    emit(mo.branch ? "a*" : "a", mo.a);
    emit("g", mo.m);
    emit("g*", mo.n);
    return os.str();
}

std::string algebra_to_string(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mo, c] : e.terms()) {
        std::string cs = ms_to_string(c);
        bool simple_negative = cs.size() > 1 && cs[0] == '-' &&
                               cs.find('+') == std::string::npos &&
                               cs.find('-', 1) == std::string::npos;
        if (!first) {
            if (simple_negative) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        bool composite = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        if (mo.is_one()) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1") {
        } else if (cs == "-1") {
            os << "-";
        } else {
            os << (composite ? "(" + cs + ")" : cs) << " ";
        }
        os << monomial_to_string(mo);
    }
    return os.str();
}

}  // namespace qsu2
