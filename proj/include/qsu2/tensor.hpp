#pragma once

// Tensor powers A^(x)r with each slot independently normal-ordered.

#include "qsu2/algebra.hpp"

#include <functional>

namespace qsu2 {

class Tensor {
  public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, MuScalar>;

    explicit Tensor(int arity) : arity_(arity) {}

    static Tensor one(int arity) {
        Tensor t(arity);
        t.add_term(Key(arity, Monomial::one()), MuScalar(1));
        return t;
    }
    static Tensor from_element(const AlgebraElement& a) {
        Tensor t(1);
        for (auto& [mo, c] : a.terms()) t.t_.emplace(Key{mo}, c);
        return t;
    }

    int arity() const { return arity_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Key& k, MuScalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    bool operator==(const Tensor& o) const { return arity_ == o.arity_ && t_ == o.t_; }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    Tensor operator-() const;
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Tensor& o) const;  // componentwise algebra product
    Tensor operator*(const MuScalar& s) const;
    Tensor& operator+=(const Tensor& o) { *this = *this + o; return *this; }
    Tensor& operator-=(const Tensor& o) { *this = *this - o; return *this; }

    // a (x) b with arities adding
    static Tensor outer(const Tensor& a, const Tensor& b);

    // Replace slot i by the image of an algebra map (given on monomials as an
    // AlgebraElement-valued function); arity unchanged.
    Tensor map_slot(int slot, const std::function<AlgebraElement(const Monomial&)>& f) const;
    // Contract slot i with a linear functional; arity drops by one.
    Tensor contract_slot(int slot, const std::function<MuScalar(const Monomial&)>& f) const;
    // Apply the coproduct to slot i; arity grows by one.
    Tensor expand_slot(int slot, const std::function<Tensor(const Monomial&)>& cop) const;

    AlgebraElement to_element() const;  // arity 1 only

    // Multiply slots i and j (i < j) together into slot i; arity drops by one.
    Tensor merge_slots(int i, int j) const;

  private:
    int arity_;
    Terms t_;
};

std::string tensor_to_string(const Tensor& t);

}  // namespace qsu2
