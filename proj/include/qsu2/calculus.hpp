#pragma once

// Minimal admissible bicovariant calculus over quantum SU(2). Left-invariant
// forms are stored through their faithful image in the quantum 2-sphere
// algebra Q (the left-U(1)-invariant part of A), where the projection pi is
// computed as rho = (X (x) id) ad. Provides the spherical-harmonic basis, the
// section L of ker(eps), the embedded differential, structure constants,
// degree-2 wedge reduction, the adjoint coaction, star/antipode twists, the
// invariant scalar product and the conjugation.

#include "qsu2/hopf.hpp"

#include <mutex>
#include <optional>

namespace qsu2 {

struct InvariantForm {
    AlgebraElement q_rep;                    // element of Q
    std::optional<AlgebraElement> preimage;  // a with pi(a) = this form

    bool is_zero() const { return q_rep.is_zero(); }
};

// coefficients over the flattened harmonic basis (k ascending, m ascending)
using FormCoords = std::map<int, MuScalar>;

struct Tensor2Form {
    std::map<std::pair<int, int>, MuScalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(int i, int j, const MuScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    Tensor2Form operator+(const Tensor2Form& o) const;
    Tensor2Form operator-(const Tensor2Form& o) const;
    Tensor2Form operator*(const MuScalar& s) const;
    bool operator==(const Tensor2Form& o) const { return terms == o.terms; }
};

struct Wedge2Form {
    Tensor2Form rep;     // canonical coset representative
    int relation_degree  // degree bound of the Rhat spanning set reduced by
        = 0;
    bool operator==(const Wedge2Form& o) const { return rep == o.rep; }
};

class CalculusContext {
  public:
    explicit CalculusContext(int spin_cutoff);

    int cutoff() const { return cutoff_; }
    int ext_cutoff() const { return ext_; }
    HopfContext& hopf() { return hopf_; }

    static int flat(int k, int m) { return k * k + (m + k); }
    static std::pair<int, int> unflat(int i);
    int flat_size() const { return (cutoff_ + 1) * (cutoff_ + 1); }

    // --- harmonic basis -----------------------------------------------------
    // Engine harmonics: the exact rational-coefficient rescaling of the
    // normalized harmonics.  literal = sqrt(scale2) * engine vector, with the
    // square root taken only in numeric evaluation mode.
    const AlgebraElement& harmonic(int k, int m);
    XPoly zonal_poly(int k) const;      // q_k: the Rodrigues polynomial, unnormalized
    MuScalar zonal_norm2(int k);        // N_k = h(q_k(g g*)^2): fixes c_k = N_k^(-1/2)
    MuScalar harmonic_scale2(int k, int m);  // R_km = (k-|m|)_mu!/(k+|m|)_mu! / N_k

    FormCoords coords(const AlgebraElement& q_elem);
    AlgebraElement from_coords(const FormCoords& c);

    // --- projection and structure maps ---------------------------------------
    InvariantForm pi_project(const AlgebraElement& a);
    InvariantForm form_from_q(AlgebraElement q_rep);

    // the sigma-model vectors of the displayed singlet/triplet basis
    InvariantForm epsilon_form();   // pi(mu^2 a + a*)
    InvariantForm eta_plus_form();  // pi(g)
    InvariantForm eta_form();       // pi(a - a*)
    InvariantForm eta_minus_form(); // pi(g*)

    // section L = C rhat + sum L_k and its inverse against pi
    AlgebraElement section_inverse(const AlgebraElement& q_rep);
    const std::vector<AlgebraElement>& section_basis(int k) { return hopf_.section_subspace(k); }
    AlgebraElement preimage_of(const InvariantForm& f);
    // cached section preimage of the engine basis vector i
    const AlgebraElement& basis_preimage(int i);
    // cached adjoint coaction of the engine basis vector i
    const std::map<int, AlgebraElement>& omega_basis(int i);

    // right module action pi(a) o b = pi[(a - eps(a)) b]
    InvariantForm circ_action(const InvariantForm& f, const AlgebraElement& b);
    // pi(a)* = -pi[kappa(a)*]
    InvariantForm star_form(const InvariantForm& f);
    // varkappa pi = -pi kappa^2
    InvariantForm varkappa(const InvariantForm& f);

    // adjoint coaction of G on Gamma_inv, as flat-index -> A coefficient
    std::map<int, AlgebraElement> omega_coaction(const InvariantForm& f);
    std::map<int, AlgebraElement> omega_coaction_via_ad(const InvariantForm& f);
    // per-multiplet coaction matrix: Delta(zeta_km) = sum_l zeta_kl (x) C[l][m]
    const std::vector<std::vector<AlgebraElement>>& coaction_matrix(int k);

    // --- embedded differential ------------------------------------------------
    Tensor2Form embedded_differential(const InvariantForm& f);
    // cached embedded differential of the engine basis vector with flat index i
    const Tensor2Form& delta_basis(int i);
    // d^{ij}_k with delta(e_k) = -1/2 sum d^{ij}_k e_i (x) e_j, engine basis
    const std::map<std::tuple<int, int, int>, MuScalar>& structure_constants();
    MuScalar d_coeff(int i, int j, int k);
    // (d^{jk}_i - d^{kj}_i)/2, the antisymmetrized tensor entering the
    // equations of motion
    MuScalar eom_coeff(int i, int j, int k);

    // --- wedge ----------------------------------------------------------------
    Wedge2Form wedge2_reduce(const Tensor2Form& t);
    Wedge2Form d_inv(const InvariantForm& f);
    Wedge2Form d_inv_with_preimage(const AlgebraElement& a);
    // relation space spanned by (pi (x) pi) Delta(rhat ker(eps)) at this cutoff
    const EchelonBasis& wedge_relations();

    // --- invariant metric and conjugation ---------------------------------------
    // diagonal of the invariant Gram matrix on multiplet k in the engine
    // basis, normalized to 1 at m = 0
    MuScalar gram_weight(int k, int m);
    // declared-orthonormal scalar product (antilinear in the first slot)
    MuScalar scalar_product(const InvariantForm& a, const InvariantForm& b);
    // bar: the antilinear map with sum_i e_i (x) bar(e_i) invariant,
    // normalized by bar . bar = id; engine-basis matrix, bar(z_i) = sum B[j][i] z_j
    const std::vector<std::vector<MuScalar>>& bar_matrix(int k);
    InvariantForm conjugation_bar(const InvariantForm& f);

    bool selection_rule_check(int n);
    MuScalar nu(const InvariantForm& f);  // nu pi = X

    // spins present in a coordinate vector
    static std::pair<int, int> spin_of_pair(const std::pair<int, int>& ij);

  private:
    void build_harmonics();
    void build_wedge();

    mutable std::recursive_mutex rmutex_;
    int cutoff_, ext_;
    HopfContext hopf_;
    std::vector<AlgebraElement> harm_;            // flat order up to ext_
    std::vector<MuScalar> gramw_;                 // flat, up to cutoff_
    std::map<int, std::vector<std::vector<AlgebraElement>>> coact_;
    std::map<int, std::vector<std::vector<MuScalar>>> bar_;
    std::map<int, MuScalar> zonal_norm2_;
    std::map<std::tuple<int, int, int>, MuScalar> dtable_;
    std::map<int, Tensor2Form> delta_cache_;
    std::map<int, AlgebraElement> preimage_cache_;
    std::map<int, std::map<int, AlgebraElement>> omega_cache_;
    struct SectionSolver {
        std::vector<AlgebraElement> ells;
        std::unique_ptr<ExpressSolver> solver;
    };
    std::map<int, SectionSolver> section_solver_;  // keyed by max spin
    bool dtable_ready_ = false;
    std::optional<EchelonBasis> wedge_rel_;
    std::vector<size_t> wedge_pair_of_col_;  // column -> pair encoding
    MonoIndexer qix_;                        // Q-monomial index space at ext_
    std::unique_ptr<ExpressSolver> harm_solver_;
    std::map<Monomial, FormCoords> rho_coords_;  // cached coords of rho(monomial)

    FormCoords coords_of_rho(const Monomial& mo);
};

std::string tensor2_to_string(const Tensor2Form& t);

}  // namespace qsu2
