#include "qsu2/tensor.hpp"

#include <sstream>

namespace qsu2 {

Tensor Tensor::operator-() const {
    Tensor r(arity_);
    for (auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

Tensor Tensor::operator+(const Tensor& o) const {
    if (arity_ != o.arity_) throw Error("tensor arity mismatch");
    Tensor r(*this);
    for (auto& [k, c] : o.t_) r.add_term(k, c);
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + (-o); }

Tensor Tensor::operator*(const MuScalar& s) const {
    Tensor r(arity_);
    if (s.is_zero()) return r;
    for (auto& [k, c] : t_) r.add_term(k, c * s);
    return r;
}

Tensor Tensor::operator*(const Tensor& o) const {
    if (arity_ != o.arity_) throw Error("tensor arity mismatch");
    Tensor r(arity_);
    for (auto& [kx, cx] : t_)
        for (auto& [ky, cy] : o.t_) {
            // product slot by slot; each slot expands into an AlgebraElement
            std::vector<AlgebraElement> slots(arity_);
            for (int s = 0; s < arity_; ++s) slots[s] = mono_mul(kx[s], ky[s]);
            // distribute
            Key key(arity_);
            MuScalar base = cx * cy;
            std::function<void(int, MuScalar)> rec = [&](int s, MuScalar acc) {
                if (s == arity_) {
                    r.add_term(key, acc);
                    return;
                }
                for (auto& [mo, c] : slots[s].terms()) {
                    key[s] = mo;
                    rec(s + 1, acc * c);
                }
            };
            rec(0, base);
        }
    return r;
}

Tensor Tensor::outer(const Tensor& a, const Tensor& b) {
    Tensor r(a.arity_ + b.arity_);
    for (auto& [ka, ca] : a.t_)
        for (auto& [kb, cb] : b.t_) {
            Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add_term(k, ca * cb);
        }
    return r;
}

Tensor Tensor::map_slot(int slot, const std::function<AlgebraElement(const Monomial&)>& f) const {
    Tensor r(arity_);
    for (auto& [k, c] : t_) {
        AlgebraElement img = f(k[slot]);
        for (auto& [mo, ci] : img.terms()) {
            Key key = k;
            key[slot] = mo;
            r.add_term(key, c * ci);
        }
    }
    return r;
}

Tensor Tensor::contract_slot(int slot, const std::function<MuScalar(const Monomial&)>& f) const {
    Tensor r(arity_ - 1);
    for (auto& [k, c] : t_) {
        MuScalar v = f(k[slot]);
        if (v.is_zero()) continue;
        Key key;
        key.reserve(arity_ - 1);
        for (int s = 0; s < arity_; ++s)
            if (s != slot) key.push_back(k[s]);
        r.add_term(key, c * v);
    }
    return r;
}

Tensor Tensor::expand_slot(int slot, const std::function<Tensor(const Monomial&)>& cop) const {
    Tensor r(arity_ + 1);
    for (auto& [k, c] : t_) {
        Tensor img = cop(k[slot]);  // arity 2
        for (auto& [pair, ci] : img.terms()) {
            Key key;
            key.reserve(arity_ + 1);
            for (int s = 0; s < slot; ++s) key.push_back(k[s]);
            key.push_back(pair[0]);
            key.push_back(pair[1]);
            for (int s = slot + 1; s < arity_; ++s) key.push_back(k[s]);
            r.add_term(key, c * ci);
        }
    }
    return r;
}

AlgebraElement Tensor::to_element() const {
    if (arity_ != 1) throw Error("to_element requires arity 1");
    AlgebraElement e;
    for (auto& [k, c] : t_) e.add_term(k[0], c);
    return e;
}

Tensor Tensor::merge_slots(int i, int j) const {
    Tensor r(arity_ - 1);
    for (auto& [k, c] : t_) {
        AlgebraElement prod = mono_mul(k[i], k[j]);
        for (auto& [mo, cp] : prod.terms()) {
            Key key;
            key.reserve(arity_ - 1);
            for (int s = 0; s < arity_; ++s) {
                if (s == j) continue;
                key.push_back(s == i ? mo : k[s]);
            }
            r.add_term(key, c * cp);
        }
    }
    return r;
}

std::string tensor_to_string(const Tensor& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = ms_to_string(c);
        bool composite = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        if (cs == "1") {
        } else if (cs == "-1") {
            os << "-";
        } else {
            os << (composite ? "(" + cs + ")" : cs) << " ";
        }
        os << "(";
        for (size_t s = 0; s < k.size(); ++s) {
            if (s) os << " | ";
            os << monomial_to_string(k[s]);
        }
        os << ")";
    }
    return os.str();
}

}  // namespace qsu2
