#pragma once

// The *-algebra A of polynomial functions on quantum SU(2): normal-ordered
// monomials (alpha-power or alpha*-power) . gamma^m . gamma*^n, with the six
// commutation relations
//
//   a g  = mu g a        g a* = mu a* g       g g* = g* g
//   a* a = 1 - g* g      a a* = 1 - mu^2 g* g
//
// and their star conjugates, giving a PBW-style basis.

#include "qsu2/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qsu2 {

enum class Gen : uint8_t { A, As, G, Gs };

struct Monomial {
    // branch 0: alpha^a, branch 1: alpha*^a (a >= 1 when branch == 1)
    uint8_t branch = 0;
    int a = 0, m = 0, n = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial gen(Gen g) {
        switch (g) {
            case Gen::A: return Monomial{0, 1, 0, 0};
            case Gen::As: return Monomial{1, 1, 0, 0};
            case Gen::G: return Monomial{0, 0, 1, 0};
            default: return Monomial{0, 0, 0, 1};
        }
    }

    bool is_one() const { return a == 0 && m == 0 && n == 0; }
    int degree() const { return a + m + n; }
    // U(1)-weights under the left/right regular coactions of G_cl
    int left_weight() const { return (branch ? -a : a) - m + n; }
    int right_weight() const { return (branch ? -a : a) + m - n; }

    auto operator<=>(const Monomial&) const = default;
};

std::string monomial_to_string(const Monomial& mo);

class AlgebraElement {
  public:
    using Terms = std::map<Monomial, MuScalar>;

    AlgebraElement() = default;
    explicit AlgebraElement(MuScalar s) { add_term(Monomial::one(), std::move(s)); }

    static AlgebraElement one() { return AlgebraElement(MuScalar(1)); }
    static AlgebraElement generator(Gen g) {
        AlgebraElement e;
        e.add_term(Monomial::gen(g), MuScalar(1));
        return e;
    }
    static AlgebraElement monomial(const Monomial& mo, MuScalar c = MuScalar(1)) {
        AlgebraElement e;
        e.add_term(mo, std::move(c));
        return e;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    int degree() const {
        int d = -1;
        for (auto& [mo, c] : t_) d = std::max(d, mo.degree());
        return d;
    }
    MuScalar coeff(const Monomial& mo) const {
        auto it = t_.find(mo);
        return it == t_.end() ? MuScalar() : it->second;
    }
    // scalar multiple of 1, if the element is one (throws otherwise)
    MuScalar scalar_value() const;

    void add_term(const Monomial& mo, MuScalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(mo, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    bool operator==(const AlgebraElement& o) const { return t_ == o.t_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const MuScalar& s) const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const AlgebraElement& o) { *this = *this * o; return *this; }

    AlgebraElement pow(int e) const;

  private:
    Terms t_;
};

// normal form of the product of two basis monomials
AlgebraElement mono_mul(const Monomial& x, const Monomial& y);

// antimultiplicative star involution, conjugating coefficients
AlgebraElement star(const AlgebraElement& e);

std::string algebra_to_string(const AlgebraElement& e);

// --- free words -------------------------------------------------------------
// A free word in the generators, used by the parser and by the confluence
// tests (reduction of free words by the defining relations in arbitrary
// order must agree with the structured product).

struct FreeTerm {
    std::vector<Gen> word;
    MuScalar coeff{1};
};

AlgebraElement normal_form(const std::vector<FreeTerm>& terms);

}  // namespace qsu2
