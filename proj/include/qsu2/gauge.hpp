#pragma once

// Local gauge theory over one chart: a free graded-commutative differential
// algebra on the field symbols A(k,m), dA(k,m), S(k,m) = *F(bar e_{k,m}) and
// dS(k,m), with coefficients in the exact chart function field Q(i)(mu)(t).
// Provides curvature, lagrangian, Yang-Mills equations of motion, gauge and
// beta transformations and the quantum invariance checks.

#include "qsu2/calculus.hpp"

namespace qsu2 {

// chart functions: rational functions of the formal real chart coordinate t
using ChartFn = RatFun<MuScalar>;

inline ChartFn chart_t() { return ChartFn::variable(); }
inline ChartFn chart_const(const MuScalar& s) { return ChartFn(s); }
inline ChartFn conj(const ChartFn& f) {
    return f.map_coeffs([](const MuScalar& s) { return conj(s); });
}
ChartFn chart_ddt(const ChartFn& f);

using ChartCharacter = CharacterT<ChartFn>;
ChartFn chart_char_eval(const ChartCharacter& g, const AlgebraElement& a);
// the standard unit-modulus family (c + it)/(c - it)
ChartCharacter chart_character_standard(const Rat& c);

// --- field symbols -------------------------------------------------------------

enum class SymKind : uint8_t { A = 0, DA = 1, S = 2, DS = 3, Dt = 4 };

struct FieldSymbol {
    SymKind kind;
    int index;  // flattened harmonic index; 0 for Dt
    auto operator<=>(const FieldSymbol&) const = default;
};

int symbol_degree(SymKind k, int dim);

class FieldExpression {
  public:
    using Term = std::vector<FieldSymbol>;  // canonically sorted
    using Terms = std::map<Term, ChartFn>;

    explicit FieldExpression(int dim = 4) : dim_(dim) {}
    static FieldExpression scalar(const ChartFn& c, int dim = 4);
    static FieldExpression symbol(SymKind k, int index, int dim = 4);

    int dim() const { return dim_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;  // graded degree of a homogeneous expression (-1 if 0)

    void add_term(Term syms, ChartFn c);  // canonicalizes with Koszul sign

    bool operator==(const FieldExpression& o) const { return t_ == o.t_; }
    bool operator!=(const FieldExpression& o) const { return !(*this == o); }

    FieldExpression operator-() const;
    FieldExpression operator+(const FieldExpression& o) const;
    FieldExpression operator-(const FieldExpression& o) const;
    FieldExpression operator*(const FieldExpression& o) const;
    FieldExpression operator*(const ChartFn& c) const;
    FieldExpression operator*(const MuScalar& c) const { return *this * chart_const(c); }
    FieldExpression& operator+=(const FieldExpression& o) { *this = *this + o; return *this; }
    FieldExpression& operator-=(const FieldExpression& o) { *this = *this - o; return *this; }

    // exterior differential: d A = dA, d S = dS, d(dA) = d(dS) = d(dt) = 0,
    // and d f = (df/dt) dt on coefficients
    FieldExpression d() const;

    // substitute A(i) -> sum_j M[j][i] A(j) and the same matrix pattern for
    // dA, S, dS (basis change of the field symbols)
    FieldExpression substitute_linear(
        const std::function<std::vector<std::pair<int, ChartFn>>(SymKind, int)>& image) const;

  private:
    int dim_;
    Terms t_;
};

std::string field_to_string(const FieldExpression& e, bool latex = false);

// --- connections and the gauge engine -------------------------------------------

struct LocalConnection {
    int cutoff = 1;
    int dim = 4;
    bool hermitian = true;  // bookkeeping flag
    std::map<int, FieldExpression> value;  // flat index -> degree-1 expression

    const FieldExpression& at(int i) const;
};

class GaugeContext {
  public:
    GaugeContext(CalculusContext& calc, int dim = 4) : calc_(calc), dim_(dim) {}

    CalculusContext& calculus() { return calc_; }
    int dim() const { return dim_; }
    int nbasis() const { return calc_.flat_size(); }

    LocalConnection free_connection() const;
    LocalConnection zero_connection() const;

    // <phi,psi>(theta_i) = sum_k phi(theta^1_k) psi(theta^2_k) over the
    // embedded-differential legs of the basis form i
    FieldExpression bracket(const std::map<int, FieldExpression>& phi,
                            const std::map<int, FieldExpression>& psi, int i);

    // F = dA - <A,A>, one expression per basis index
    std::map<int, FieldExpression> curvature(const LocalConnection& a);

    // sum_i F(e_i) * S(e_i) over the declared-orthonormal basis, expressed in
    // the engine basis with its scale weights
    FieldExpression lagrangian(const std::map<int, FieldExpression>& f);

    // d S(k) + sum_ij (d^{jk}_i - d^{kj}_i)/2 (R_i/R_k) A(j) S(i) per index k
    std::map<int, FieldExpression> equations_of_motion();

    // Eq.-46 transformation: A(theta) -> sum A(theta_k) gamma(c_k) + del(theta)
    LocalConnection gauge_transform(const LocalConnection& a, const ChartCharacter& g);
    // del(theta_i): the inhomogeneous term gamma(kappa(a(1))) d gamma(a(2)) dt
    FieldExpression del_term(const ChartCharacter& g, int i);
    // Eq.-47 transform of a curvature-like indexed map
    std::map<int, FieldExpression> covariant_transform(
        const std::map<int, FieldExpression>& f, const ChartCharacter& g);

    // true iff sum_k c_lk c*_nk = delta_ln 1 for every multiplet <= cutoff
    bool quantum_invariance_check();
    // true iff no A(singlet) symbol appears in any nonsinglet curvature
    bool singlet_decoupling_check();

    // split A = A_cl + A_perp with A_cl vanishing on ker(nu) and A_perp on eps
    std::pair<LocalConnection, LocalConnection> split_connection(const LocalConnection& a);

    MuScalar scale2(int i);  // harmonic_scale2 by flat index

  private:
    CalculusContext& calc_;
    int dim_;
};

// --- the degree <= 2 local model of Omega(U) ox Gamma^ ox Gamma^ ------------------

// One Gamma^-slot: an algebra part and a form part of degree 0, 1 (a basis
// index) or 2 (a reduced wedge pair).  Encoded as -1, i, or PAIR_BASE + code.
struct EnvSlot {
    Monomial alg;
    int form = -1;
    auto operator<=>(const EnvSlot&) const = default;
};

class BetaEngine;

// contraction of the middle slot leaves (field expr) (x) Gamma^-slot terms
using ContractedBeta = std::map<EnvSlot, FieldExpression>;

class BetaExpr {
  public:
    explicit BetaExpr(BetaEngine* e) : e_(e) {}

    using Key = std::pair<EnvSlot, EnvSlot>;
    const std::map<Key, FieldExpression>& terms() const { return t_; }
    void add(const EnvSlot& mid, const EnvSlot& last, const FieldExpression& f);
    bool is_zero() const;

    BetaExpr operator+(const BetaExpr& o) const;
    BetaExpr operator-(const BetaExpr& o) const;
    BetaExpr operator*(const BetaExpr& o) const;
    BetaExpr d() const;

    bool operator==(const BetaExpr& o) const;

    // contract the middle slot with the differential character extension of g
    // (defined on form degree <= 1): x (x) w (x) u -> x f^(w) (x) u
    ContractedBeta contract_middle(const ChartCharacter& g) const;

  private:
    std::map<Key, FieldExpression> t_;
    BetaEngine* e_;
};

class BetaEngine {
  public:
    explicit BetaEngine(GaugeContext& g);

    int pair_base() const { return pair_base_; }
    // wedge-reduce the single pair theta_i (x) theta_j into slot-form codes
    std::vector<std::pair<int, MuScalar>> wedge_pair(int i, int j);
    // d theta_i as reduced pair codes
    std::vector<std::pair<int, MuScalar>> d_theta(int i);
    // circ table: theta_i o monomial, in basis coords
    FormCoords circ_coords(int i, const Monomial& mo);

    // Eq. 49: the beta transform of a connection, per basis index
    std::map<int, BetaExpr> beta_connection(const LocalConnection& a);
    // Eq. 410: the beta transform of a curvature map
    std::map<int, BetaExpr> beta_curvature(const std::map<int, FieldExpression>& f);
    // <phi,psi> for BetaExpr-valued maps
    BetaExpr bracket(const std::map<int, BetaExpr>& phi, const std::map<int, BetaExpr>& psi,
                     int i);

    GaugeContext& gauge() { return g_; }

    // slot product helpers (exposed for the d/product implementation)
    std::vector<std::pair<EnvSlot, MuScalar>> slot_mul(const EnvSlot& a, const EnvSlot& b);
    std::vector<std::pair<EnvSlot, MuScalar>> slot_d(const EnvSlot& a);
    static int slot_degree(const EnvSlot& s);

  private:
    GaugeContext& g_;
    int pair_base_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, MuScalar>>> wedge_cache_;
    std::map<std::pair<int, Monomial>, FormCoords> circ_cache_;
    std::map<int, std::vector<std::pair<int, MuScalar>>> dtheta_cache_;

    friend class BetaExpr;
};

}  // namespace qsu2
