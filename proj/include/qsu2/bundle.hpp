#pragma once

// Quantum principal bundles and quantum gauge bundles glued from classical
// U(1) cocycles over a finite cover. Chart function algebras are modeled as
// rational functions in one formal real variable t with the formal
// differential dt, so every gluing identity is an exact rational-function
// identity.

#include "qsu2/gauge.hpp"

#include <array>
#include <set>

namespace qsu2 {

struct CoverNerve {
    std::vector<std::string> charts;
    std::set<std::pair<int, int>> nerve2;        // unordered content, both orders stored
    std::set<std::array<int, 3>> nerve3;

    int size() const { return (int)charts.size(); }
    bool has_pair(int u, int v) const { return u == v || nerve2.count({u, v}) > 0; }
    bool has_triple(int u, int v, int w) const;
    void validate() const;  // closure of N3 under projection and permutation

    // full nerve on n charts
    static CoverNerve full(int n);
};

class CocycleFamily {
  public:
    CocycleFamily(CoverNerve cover, std::map<std::pair<int, int>, ChartCharacter> g);

    const CoverNerve& cover() const { return cover_; }
    const ChartCharacter& at(int u, int v) const;

    // exact identity checks g_UV g_VW = g_UW on N3 and g_UV^-1 = g_VU
    bool validate(std::string* firstFailure = nullptr) const;

    // coboundary family g_UV = h_U h_V^-1
    static CocycleFamily coboundary(CoverNerve cover, const std::vector<ChartCharacter>& h);

  private:
    CoverNerve cover_;
    std::map<std::pair<int, int>, ChartCharacter> g_;
};

// --- sections ---------------------------------------------------------------------

// an element of S(U) (x) A
class ChartSection {
  public:
    using Terms = std::map<Monomial, ChartFn>;

    ChartSection() = default;
    explicit ChartSection(const ChartFn& f) { add(Monomial::one(), f); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Monomial& mo, const ChartFn& c);

    bool operator==(const ChartSection& o) const { return t_ == o.t_; }
    bool operator!=(const ChartSection& o) const { return !(*this == o); }
    ChartSection operator+(const ChartSection& o) const;
    ChartSection operator-(const ChartSection& o) const;
    ChartSection operator*(const ChartSection& o) const;
    ChartSection operator*(const ChartFn& f) const;
    ChartSection star_section() const;

    static ChartSection from_algebra(const AlgebraElement& a, const ChartFn& f = ChartFn(1));

  private:
    Terms t_;
};

// an element of S(U) (x) A (x) A
class ChartSection2 {
  public:
    using Key = std::pair<Monomial, Monomial>;
    using Terms = std::map<Key, ChartFn>;

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Key& k, const ChartFn& c);
    bool operator==(const ChartSection2& o) const { return t_ == o.t_; }
    ChartSection2 operator-(const ChartSection2& o) const;

  private:
    Terms t_;
};

// transition maps; psi_UV(f (x) a) = f g_VU(a(1)) (x) a(2),
// xi_UV(f (x) a) = f g_UV[kappa(a(1)) a(3)] (x) a(2)
ChartSection psi_map(const CocycleFamily& fam, int u, int v, const ChartSection& s);
ChartSection xi_map(const CocycleFamily& fam, int u, int v, const ChartSection& s);

// id (x) Delta, id (x) eps, id (x) kappa on a chart leg
ChartSection2 section_coproduct(const ChartSection& s);
ChartFn section_counit(const ChartSection& s);
ChartSection section_antipode(const ChartSection& s);

// apply xi/psi to one tensor leg of an S (x) A (x) A element
ChartSection2 map_leg2(const CocycleFamily& fam, int u, int v, const ChartSection2& s,
                       int leg, bool use_xi);

// --- glued algebras ------------------------------------------------------------------

// one S(U) (x) A element per chart
using LocalSection = std::vector<ChartSection>;

enum class GlueMode { Bundle, GaugeBundle };  // psi gluing (B) or xi gluing (D)

bool glue_check(const CocycleFamily& fam, const LocalSection& s, GlueMode mode,
                std::string* firstFailure = nullptr);

// extend chart-u data to a glued family through the transition maps
LocalSection spread_from_chart(const CocycleFamily& fam, int u, const ChartSection& s,
                               GlueMode mode);
LocalSection constant_section(const CocycleFamily& fam, const ChartFn& f);

struct LocalStructureMaps {
    std::vector<ChartSection2> phi;  // per chart, id (x) Delta image (both phi_M and beta_M)
    std::vector<ChartFn> eps;        // per chart, id (x) eps image
    LocalSection kappa;              // per chart, id (x) kappa image
    ChartFn eps_common;              // the S(M) value (charts agree)
};

LocalStructureMaps local_structure_maps(const CocycleFamily& fam, const LocalSection& q,
                                        bool require_membership = true);

// --- gauge transformations --------------------------------------------------------------

// chartwise character data gamma_U with the compatibility
// gamma_V(a(1)) g_VU(a(2)) = gamma_U(a)
struct GaugeData {
    std::vector<ChartCharacter> gamma;
};

bool gauge_data_compatible(const CocycleFamily& fam, const GaugeData& gd,
                           std::string* firstFailure = nullptr);
// gamma_U = gamma0 . g_{0U}-corrected family built from one chart's character
GaugeData gauge_data_from_seed(const CocycleFamily& fam, const ChartCharacter& seed);
GaugeData gauge_data_inverse(const GaugeData& gd);
GaugeData gauge_data_compose(const CocycleFamily& fam, const GaugeData& a, const GaugeData& b);

// pi_U gamma(b) = sum f_i gamma_U(a_i(1)) (x) a_i(2)
LocalSection gauge_apply(const GaugeData& gd, const LocalSection& s);
// the S(M)-valued functional f corresponding to gamma (Eq. 327 route)
ChartFn gauge_functional(const CocycleFamily& fam, const GaugeData& gd, const LocalSection& s);

// --- classical points ----------------------------------------------------------------------

struct BundlePoint {
    int chart = 0;
    Rat t0;             // chart coordinate
    MuScalar fiber;     // unit-modulus fiber value (character value on alpha)
};

// evaluate a glued section at a classical point
MuScalar point_eval(const BundlePoint& p, const LocalSection& s);
// gamma_cl(p) = p . gamma^-1
BundlePoint classical_restriction(const GaugeData& gd, const BundlePoint& p);

// --- the degree <= 1 differential model ------------------------------------------------------

// element of Omega^{<=1}(U) (x)^ Gamma^{<=1}: f (x) a, f dt (x) a, f (x) a theta_i
class ChartFormElem {
  public:
    std::map<Monomial, ChartFn> d0;
    std::map<Monomial, ChartFn> dt1;
    std::map<std::pair<Monomial, int>, ChartFn> g1;

    bool is_zero() const { return d0.empty() && dt1.empty() && g1.empty(); }
    bool operator==(const ChartFormElem& o) const {
        return d0 == o.d0 && dt1 == o.dt1 && g1 == o.g1;
    }
    ChartFormElem operator+(const ChartFormElem& o) const;
    ChartFormElem operator-(const ChartFormElem& o) const;

    void add_d0(const Monomial& mo, const ChartFn& c);
    void add_dt1(const Monomial& mo, const ChartFn& c);
    void add_g1(const Monomial& mo, int form, const ChartFn& c);

    static ChartFormElem from_section(const ChartSection& s);
};

// d on a degree-0 element: d(f (x) a) = f' dt (x) a + f (x) a(1) pi(a(2))
ChartFormElem chart_d(CalculusContext& calc, const ChartSection& s);
// the unique differential extension of xi_UV on degree <= 1
ChartFormElem xi_wedge_degree1(CalculusContext& calc, const CocycleFamily& fam, int u, int v,
                               const ChartFormElem& w);

}  // namespace qsu2
