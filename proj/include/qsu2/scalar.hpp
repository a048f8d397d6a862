#pragma once

// Exact coefficient arithmetic: the field Q(i)(mu) of rational functions in
// the deformation parameter mu with Gaussian-rational coefficients, plus the
// q-calculus utilities built on top of it.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsu2 {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};
struct CutoffError : Error {
    explicit CutoffError(const std::string& what) : Error(what) {}
};
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};
struct RangeError : Error {
    explicit RangeError(const std::string& what) : Error(what) {}
};
struct SolveError : Error {
    explicit SolveError(const std::string& what) : Error(what) {}
};

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Gaussian rationals a + b i.

struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat inv() const {
        Rat n = norm2();
        if (n == 0) throw Error("division by zero GaussRat");
        return GaussRat(re / n, -im / n);
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

std::string gauss_to_string(const GaussRat& g);

// ---------------------------------------------------------------------------
// Dense polynomials over a field K, coefficients in ascending powers.

template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(K c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }

    static Poly x() {
        std::vector<K> v(2);
        v[1] = K(1);
        return Poly(std::move(v));
    }
    static Poly monomial(int deg, K coef) {
        std::vector<K> v(deg + 1);
        v[deg] = std::move(coef);
        return Poly(std::move(v));
    }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero poly
    K coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : K(0); }
    const K& leading() const { return c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<K> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] += c_[i];
            if (i < o.c_.size()) v[i] += o.c_[i];
        }
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> v(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly operator*(const K& k) const {
        Poly r(*this);
        for (auto& x : r.c_) x = x * k;
        r.trim();
        return r;
    }

    // Euclidean division; K must be a field.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error("polynomial division by zero");
        Poly r(*this);
        std::vector<K> q(std::max<int>(0, degree() - d.degree() + 1));
        K dl = d.leading().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            K f = r.leading() * dl;
            q[k] = f;
            for (int i = 0; i <= d.degree(); ++i) r.c_[i + k] -= f * d.c_[i];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inv();
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    template <class F>
    auto map(F f) const {
        std::vector<decltype(f(K(0)))> v;
        v.reserve(c_.size());
        for (auto& x : c_) v.push_back(f(x));
        return Poly<decltype(f(K(0)))>(std::move(v));
    }

    // classical derivative (integer multiples)
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K((long)i);
        return Poly(std::move(v));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Rational functions num/den in canonical form: gcd(num, den) = 1, den monic.

template <class K>
class RatFun {
  public:
    RatFun() : num_(), den_(Poly<K>(K(1))) {}
    RatFun(long v) : num_(Poly<K>(K(v))), den_(Poly<K>(K(1))) {}
    explicit RatFun(K v) : num_(Poly<K>(std::move(v))), den_(Poly<K>(K(1))) {}
    explicit RatFun(Poly<K> n) : num_(std::move(n)), den_(Poly<K>(K(1))) {}
    RatFun(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFun variable() { return RatFun(Poly<K>::x()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    K constant_value() const {
        if (!is_constant()) throw Error("rational function is not constant");
        return num_.coeff(0) * den_.coeff(0).inv();
    }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFun operator+(const RatFun& o) const {
        return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFun operator-(const RatFun& o) const {
        return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFun operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
    RatFun inv() const {
        if (is_zero()) throw Error("division by zero rational function");
        return RatFun(den_, num_);
    }
    RatFun operator/(const RatFun& o) const { return *this * o.inv(); }

    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }

    RatFun pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFun r(1);
        RatFun b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    template <class F>
    RatFun map_coeffs(F f) const {
        return RatFun(num_.map(f), den_.map(f));
    }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw PoleError("pole of rational function at evaluation point");
        return num_.eval(x) * d.inv();
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw Error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        K lead = den_.leading().inv();
        num_ = num_ * lead;
        den_ = den_ * lead;
    }
    Poly<K> num_, den_;
};

// ---------------------------------------------------------------------------
// MuScalar: the universal coefficient field Q(i)(mu), with mu real in
// (-1,1) \ {0} and conjugation acting as i -> -i.

using MuScalar = RatFun<GaussRat>;
using MuPoly = Poly<GaussRat>;

inline MuScalar ms_int(long v) { return MuScalar(v); }
inline MuScalar ms_rat(const Rat& q) { return MuScalar(GaussRat(q)); }
inline MuScalar ms_i() { return MuScalar(GaussRat::unit_i()); }
inline MuScalar ms_mu() { return MuScalar::variable(); }
// mu^e for possibly negative e
inline MuScalar ms_mu_pow(long e) { return ms_mu().pow(e); }

inline MuScalar conj(const MuScalar& s) {
    return s.map_coeffs([](const GaussRat& g) { return g.conj(); });
}
inline bool is_real(const MuScalar& s) { return s == conj(s); }

// q-integer j_mu = (1 - mu^(2j)) / (1 - mu^2) = 1 + mu^2 + ... + mu^(2(j-1))
inline MuScalar qint(long j) {
    if (j <= 0) throw RangeError("qint requires j >= 1");
    std::vector<GaussRat> v(2 * (j - 1) + 1);
    for (long i = 0; i < j; ++i) v[2 * i] = GaussRat(1);
    return MuScalar(MuPoly(std::move(v)));
}

inline MuScalar qfact(long k) {
    if (k < 0) throw RangeError("qfact requires k >= 0");
    MuScalar r(1);
    for (long j = 1; j <= k; ++j) r *= qint(j);
    return r;
}

// Exact substitution mu -> mu0 with mu0 in (-1,1) \ {0}.
inline GaussRat eval_at(const MuScalar& s, const Rat& mu0) {
    if (mu0 == 0 || mu0 <= -1 || mu0 >= 1)
        throw RangeError("mu0 must lie in (-1,1) minus 0");
    return s.eval(GaussRat(mu0));
}

// ---------------------------------------------------------------------------
// XPoly: polynomials in an abstract indeterminate x over MuScalar, together
// with the quantum derivative  d(x^n) = n_mu x^(n-1).

using XPoly = Poly<MuScalar>;

inline XPoly qderiv(const XPoly& p) {
    if (p.degree() <= 0) return XPoly();
    std::vector<MuScalar> v(p.degree());
    for (int i = 1; i <= p.degree(); ++i) v[i - 1] = p.coeff(i) * qint(i);
    return XPoly(std::move(v));
}

inline XPoly qderiv_n(XPoly p, int k) {
    for (int i = 0; i < k; ++i) p = qderiv(p);
    return p;
}

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& q);
// Exact square root of a rational function with real coefficients, if any.
std::optional<MuScalar> ms_sqrt(const MuScalar& s);

std::string ms_to_string(const MuScalar& s, const std::string& var = "mu");
std::string xpoly_to_string(const XPoly& p, const std::string& var = "x");

}  // namespace qsu2
