#pragma once

// Hopf *-algebra structure of quantum SU(2): comultiplication, counit,
// antipode, adjoint coaction, the lie(G_cl) generator X, characters, the Haar
// state (defined operationally by its left-invariance condition and solved
// blockwise on the degree filtration), the modular automorphism, Peter-Weyl
// blocks, primitive elements, and the lambda-decomposition.

#include "qsu2/linalg.hpp"
#include "qsu2/tensor.hpp"

#include <memory>
#include <mutex>

namespace qsu2 {

// --- structure maps ---------------------------------------------------------

// Frozen generator coproducts; derived from the defining 2x2 matrix by the
// matrix-coalgebra axioms (the derivation itself is kept as a test).
Tensor coproduct_gen(Gen g);

Tensor comultiply(const AlgebraElement& a);
Tensor comultiply(const Monomial& mo);          // cached
Tensor comultiply_iter(const AlgebraElement& a, int legs);

MuScalar counit(const Monomial& mo);
MuScalar counit(const AlgebraElement& a);

// kappa on a basis monomial is a scalar multiple of a single monomial
std::pair<Monomial, MuScalar> antipode_mono(const Monomial& mo);
AlgebraElement antipode(const AlgebraElement& a);
AlgebraElement antipode_sq(const AlgebraElement& a);  // kappa^2, diagonal

MuScalar x_functional(const Monomial& mo);
MuScalar x_functional(const AlgebraElement& a);

// modular automorphism j of the Haar state (Eq-level generator values)
AlgebraElement modular_j(const AlgebraElement& a);

// ad(a) = a(2) (x) kappa(a(1)) a(3)
Tensor adjoint(const AlgebraElement& a);
Tensor adjoint(const Monomial& mo);  // cached

// rho = (X (x) id) ad;  pi is computed through its faithful image rho
AlgebraElement rho(const AlgebraElement& a);
AlgebraElement rho(const Monomial& mo);  // cached

AlgebraElement lambda_elem();            // mu a + mu^-1 a*
AlgebraElement rhat_generator();         // mu^2 a + a* - (1+mu^2) 1
AlgebraElement xpoly_at_lambda(const XPoly& p);
AlgebraElement xpoly_at(const XPoly& p, const AlgebraElement& x);

// --- characters -------------------------------------------------------------

// *-characters of A are determined by a unit-modulus value on alpha; they
// annihilate gamma and gamma*. R is any commutative *-ring presented by an
// explicit conjugate (GaussRat constants, MuScalar, chart functions).
template <class R>
struct CharacterT {
    R z, zbar;

    CharacterT(R z_, R zbar_) : z(std::move(z_)), zbar(std::move(zbar_)) {
        if (!(z * zbar == R(1))) throw Error("character value is not unit modulus");
    }
    static CharacterT identity() { return CharacterT(R(1), R(1)); }

    R eval(const Monomial& mo) const {
        if (mo.m != 0 || mo.n != 0) return R(0);
        R acc(1);
        const R& base = mo.branch ? zbar : z;
        for (int i = 0; i < mo.a; ++i) acc = acc * base;
        return acc;
    }
    CharacterT inverse() const { return CharacterT(zbar, z); }        // g . kappa
    CharacterT operator*(const CharacterT& o) const {                 // (g (x) g') phi
        return CharacterT(z * o.z, zbar * o.zbar);
    }
};

using Character = CharacterT<MuScalar>;

inline MuScalar character_eval(const Character& g, const AlgebraElement& a) {
    MuScalar r;
    for (auto& [mo, c] : a.terms()) r += c * g.eval(mo);
    return r;
}

// --- Haar state --------------------------------------------------------------

// Unique unital functional with (h (x) id) Delta(a) = h(a) 1, solved per
// degree cutoff; the system splits over the left U(1)-weight classes.
class HaarState {
  public:
    HaarState() = default;

    void ensure(int degree);
    int cutoff() const;

    MuScalar value(const Monomial& mo) const;
    MuScalar operator()(const AlgebraElement& a) const;
    // h(star(b) * a)
    MuScalar gram(const AlgebraElement& b, const AlgebraElement& a) const;

  private:
    mutable std::mutex mutex_;
    int cutoff_ = -1;
    std::map<Monomial, MuScalar> h_;
};

// --- Peter-Weyl filtration ----------------------------------------------------

struct PeterWeylBlock {
    int n = 0;
    std::vector<AlgebraElement> basis;  // dim n^2
};

std::vector<Monomial> monomial_basis(int maxdeg);

class HopfContext {
  public:
    HaarState& haar() { return haar_; }

    // blocks A_1 .. A_nmax, cached
    const std::vector<PeterWeylBlock>& peter_weyl(int nmax);

    // Haar-orthogonal projection of a onto A_n (blocks up to n-1 suffice,
    // since a is assumed to lie in degree <= n-1)
    AlgebraElement project_block_complement(const AlgebraElement& a, int n);

    // Lemma-A1 primitives: for spin k in 0..n-1 the monic polynomial p_kn of
    // degree n-k-1 with p_kn(lambda) gamma^k in A_n
    std::vector<std::pair<int, XPoly>> primitive_elements(int n);

    // (p,q) = h[ star(p(lambda)) q(lambda) (g g*)^k ]
    MuScalar poly_scalar_product(const XPoly& p, const XPoly& q, int k);
    // the A2 route h( q(lambda) g^k g*^k star(p(lambda)) )
    MuScalar poly_scalar_product_a2(const XPoly& p, const XPoly& q, int k);

    // minimal ad-invariant subspace containing a spanning seed
    std::vector<AlgebraElement> ad_orbit_span(const AlgebraElement& seed);

    // L_k, the k-spin irreducible subspace of A_{k+1} (orbit of gamma^k);
    // L_0 is the line through the rhat generator
    const std::vector<AlgebraElement>& section_subspace(int k);

    // unique preimage under the multiplication map P(lambda) (x) L_* -> A;
    // returned as (lambda power, L_* component) pairs
    std::vector<std::pair<int, AlgebraElement>> mho_decompose(const AlgebraElement& a);

  private:
    HaarState haar_;
    std::vector<PeterWeylBlock> blocks_;
    std::map<int, std::vector<AlgebraElement>> section_;
    std::mutex mutex_;
};

// vectorization helpers shared by the linear-algebra style computations
class MonoIndexer {
  public:
    size_t index(const Monomial& mo);
    std::optional<size_t> find(const Monomial& mo) const;
    size_t size() const { return order_.size(); }
    const Monomial& at(size_t i) const { return order_[i]; }
    Vec vectorize(const AlgebraElement& a, bool allow_new = true);
    Vec vectorize_fixed(const AlgebraElement& a) const;  // throws on unknown monomial

  private:
    std::map<Monomial, size_t> idx_;
    std::vector<Monomial> order_;
};

}  // namespace qsu2
