#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsu2/random.hpp"
#include "qsu2/suites.hpp"

using namespace qsu2;

TEST_CASE("pi projection basics") {
    CalculusContext ctx(1);
    CHECK(ctx.pi_project(AlgebraElement::one()).q_rep.is_zero());
    // r (a - 1) lies in the ideal and dies
    AlgebraElement r = rhat_generator();
    AlgebraElement x = AlgebraElement::generator(Gen::A) - AlgebraElement::one();
    CHECK(ctx.pi_project(r * x).q_rep.is_zero());
    // pi(mu^2 a + a*) is the scalar (mu^2-1)/2
    MuScalar half = ms_rat(Rat(1, 2));
    CHECK(ctx.epsilon_form().q_rep == AlgebraElement(ms_mu_pow(2) * half - half));
}

TEST_CASE("harmonics") {
    CalculusContext ctx(2);
    CHECK(ctx.harmonic(0, 0) == AlgebraElement::one());
    CHECK_THROWS_AS(ctx.harmonic(1, 2), RangeError);
    // zero left weight
    for (int k = 0; k <= 2; ++k)
        for (int m = -k; m <= k; ++m)
            for (auto& [mo, c] : ctx.harmonic(k, m).terms())
                CHECK(mo.left_weight() == 0);
    // spin-1 span equals the rho-images of the eta triplet
    MonoIndexer ix;
    std::vector<AlgebraElement> vs{ctx.harmonic(1, -1), ctx.harmonic(1, 0),
                                   ctx.harmonic(1, 1)};
    std::vector<AlgebraElement> etas{ctx.eta_plus_form().q_rep, ctx.eta_form().q_rep,
                                     ctx.eta_minus_form().q_rep};
    for (auto& v : vs) ix.vectorize(v);
    for (auto& v : etas) ix.vectorize(v);
    EchelonBasis eb(ix.size());
    for (auto& v : vs) eb.add(ix.vectorize_fixed(v));
    CHECK(eb.rank() == 3);
    for (auto& v : etas) CHECK(eb.contains(ix.vectorize_fixed(v)));
}

TEST_CASE("section space") {
    CalculusContext ctx(2);
    CHECK(ctx.section_basis(1).size() == 3);
    CHECK(ctx.section_basis(2).size() == 5);
    // eps-form pulls back to a multiple of the invariant generator
    AlgebraElement pre = ctx.section_inverse(ctx.epsilon_form().q_rep);
    // pre = s * rhat for a scalar s, verified by the round trip and shape
    CHECK(rho(pre) == ctx.epsilon_form().q_rep);
    AlgebraElement r = rhat_generator();
    // линear dependence of pre and r
    MonoIndexer ix;
    ix.vectorize(pre);
    ix.vectorize(r);
    EchelonBasis eb(ix.size());
    eb.add(ix.vectorize_fixed(r));
    CHECK(eb.contains(ix.vectorize_fixed(pre)));
    // round trip on random invariant forms
    Rng rng(21);
    for (int i = 0; i < 10; ++i) {
        FormCoords c;
        c[(int)rng.range(0, ctx.flat_size() - 1)] = rng.scalar_nonzero(1);
        AlgebraElement q = ctx.from_coords(c);
        CHECK(rho(ctx.section_inverse(q)) == q);
    }
}

TEST_CASE("embedded differential displays") {
    Report r = suite_calculus(2, 7);
    for (auto& c : r.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("structure constants") {
    CalculusContext ctx(1);
    ctx.structure_constants();
    // singlet rows touch only singlet+triplet pairs (delta(eps) display)
    for (auto& [key, c] : ctx.structure_constants()) {
        auto [i, j, k] = key;
        if (k == 0) {
            CHECK(i <= 3);
            CHECK(j <= 3);
        }
    }
    // reassembled d-values reproduce the displays: d^{ij}_k = -2 delta-coeff
    const Tensor2Form& d0 = ctx.delta_basis(0);
    for (auto& [ij, c] : d0.terms)
        CHECK(ctx.d_coeff(ij.first, ij.second, 0) == c * MuScalar(-2));
}

TEST_CASE("selection rule") {
    CalculusContext ctx(3);
    for (int n = 0; n <= 3; ++n) {
        INFO("spin ", n);
        CHECK(ctx.selection_rule_check(n));
    }
    // n = 0: components only at pairs with i = j
    const Tensor2Form& d = ctx.delta_basis(0);
    for (auto& [ij, c] : d.terms) {
        auto [i, j] = CalculusContext::spin_of_pair(ij);
        CHECK(i == j);
    }
}

TEST_CASE("wedge quotient at a larger margin is stable") {
    // canonical representatives computed at cutoff 1 agree with those
    // computed at cutoff 2 for tensors supported on spins <= 1
    CalculusContext small(1), big(2);
    for (int idx = 0; idx < small.flat_size(); ++idx) {
        Wedge2Form a = small.wedge2_reduce(small.delta_basis(idx));
        Wedge2Form b = big.wedge2_reduce(big.delta_basis(idx));
        CHECK(a.rep == b.rep);
    }
}

TEST_CASE("scalar product examples") {
    CalculusContext ctx(1);
    InvariantForm z00 = ctx.form_from_q(ctx.harmonic(0, 0));
    // declared orthonormality of the literal basis: the engine zonal vector
    // at k=0 is the literal one, so its norm is exactly 1
    CHECK(ctx.scalar_product(z00, z00) == ctx.harmonic_scale2(0, 0).inv());
    CHECK(ctx.harmonic_scale2(0, 0) == MuScalar(1));
    // off-diagonal orthogonality within the triplet
    InvariantForm a = ctx.form_from_q(ctx.harmonic(1, 0));
    InvariantForm b = ctx.form_from_q(ctx.harmonic(1, 1));
    CHECK(ctx.scalar_product(a, b).is_zero());
}

TEST_CASE("varkappa on the displayed basis") {
    CalculusContext ctx(1);
    // kappa^2-twist: varkappa(eps) = -eps, varkappa(eta+) = -mu^2 eta+
    CHECK(ctx.varkappa(ctx.epsilon_form()).q_rep == -ctx.epsilon_form().q_rep);
    CHECK(ctx.varkappa(ctx.eta_plus_form()).q_rep ==
          ctx.eta_plus_form().q_rep * (-ms_mu_pow(2)));
    CHECK(ctx.varkappa(ctx.eta_minus_form()).q_rep ==
          ctx.eta_minus_form().q_rep * (-ms_mu_pow(-2)));
    CHECK(ctx.varkappa(ctx.eta_form()).q_rep == -ctx.eta_form().q_rep);
}

TEST_CASE("star on the displayed basis") {
    CalculusContext ctx(1);
    CHECK(ctx.star_form(ctx.epsilon_form()).q_rep == -ctx.epsilon_form().q_rep);
    CHECK(ctx.star_form(ctx.eta_plus_form()).q_rep ==
          ctx.eta_minus_form().q_rep * ms_mu());
    CHECK(ctx.star_form(ctx.eta_form()).q_rep == -ctx.eta_form().q_rep);
}

TEST_CASE("nu split data") {
    CalculusContext ctx(1);
    MuScalar half = ms_rat(Rat(1, 2));
    CHECK(ctx.nu(ctx.epsilon_form()) == ms_mu_pow(2) * half - half);
    CHECK(ctx.nu(ctx.eta_plus_form()).is_zero());
    CHECK(ctx.nu(ctx.eta_form()) == MuScalar(1));
}

TEST_CASE("bar against star relation is reported") {
    // the conjugation is defined by invariance; record how it compares to the
    // star involution on the triplet (an empirical relation, not assumed)
    CalculusContext ctx(1);
    const auto& B = ctx.bar_matrix(1);
    bool bar_equals_minus_star = true;
    for (int m = -1; m <= 1; ++m) {
        InvariantForm z = ctx.form_from_q(ctx.harmonic(1, m));
        InvariantForm bs = ctx.conjugation_bar(z);
        InvariantForm st = ctx.star_form(z);
        if (!(bs.q_rep == -st.q_rep)) bar_equals_minus_star = false;
    }
    INFO("bar == -star on the triplet: ", bar_equals_minus_star);
    CHECK(B.size() == 3);
}
