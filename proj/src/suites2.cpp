#include "qsu2/suites.hpp"

namespace qsu2 {

namespace {

Tensor2Form outer_coords(const FormCoords& a, const FormCoords& b, const MuScalar& s) {
    Tensor2Form t;
    for (auto& [i, si] : a)
        for (auto& [j, sj] : b) t.add(i, j, si * sj * s);
    return t;
}

// slotwise circ action on a degree-2 invariant tensor:
// (theta (x) eta) o a = (theta o a(1)) (x) (eta o a(2))
Tensor2Form tensor2_circ(CalculusContext& ctx, const Tensor2Form& t, const AlgebraElement& a) {
    Tensor d = comultiply(a);
    Tensor2Form out;
    for (auto& [ij, c] : t.terms) {
        auto [k1, m1] = CalculusContext::unflat(ij.first);
        auto [k2, m2] = CalculusContext::unflat(ij.second);
        InvariantForm f1 = ctx.form_from_q(ctx.harmonic(k1, m1));
        InvariantForm f2 = ctx.form_from_q(ctx.harmonic(k2, m2));
        for (auto& [key, cc] : d.terms()) {
            InvariantForm r1 = ctx.circ_action(f1, AlgebraElement::monomial(key[0]));
            if (r1.is_zero()) continue;
            InvariantForm r2 = ctx.circ_action(f2, AlgebraElement::monomial(key[1]));
            if (r2.is_zero()) continue;
            out = out + outer_coords(ctx.coords(r1.q_rep), ctx.coords(r2.q_rep), c * cc);
        }
    }
    return out;
}

FormCoords coords_add(const FormCoords& a, const FormCoords& b, const MuScalar& s) {
    FormCoords r = a;
    for (auto& [i, c] : b) {
        auto [it, fresh] = r.try_emplace(i, c * s);
        if (!fresh) {
            it->second += c * s;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

}  // namespace

Report suite_calculus(int cutoff, uint64_t seed) {
    Report rep{"calculus", {}};
    Rng rng(seed);
    CalculusContext ctx(cutoff);

    InvariantForm eps = ctx.epsilon_form(), etap = ctx.eta_plus_form(),
                  eta = ctx.eta_form(), etam = ctx.eta_minus_form();
    FormCoords ce = ctx.coords(eps.q_rep), cp = ctx.coords(etap.q_rep),
               c0 = ctx.coords(eta.q_rep), cm = ctx.coords(etam.q_rep);
    MuScalar inv1m2 = (MuScalar(1) + ms_mu_pow(2)).inv();

    // pi kills constants and the ideal
    {
        bool ok = rho(AlgebraElement::one()).is_zero();
        AlgebraElement r = rhat_generator();
        for (int i = 0; i < 10; ++i) {
            AlgebraElement x = rng.kernel_eps_element(3, 2);
            if (!ctx.pi_project(r * x).q_rep.is_zero()) ok = false;
        }
        rep.add("pi_kills_ideal_and_constants", ok);
        MuScalar half = ms_rat(Rat(1, 2));
        rep.add("pi_of_invariant_element",
                ctx.pi_project(rhat_generator()).q_rep ==
                    AlgebraElement(ms_mu_pow(2) * half - half));
    }

    // preimage stability of pi
    {
        bool ok = true;
        AlgebraElement r = rhat_generator();
        for (int i = 0; i < 8; ++i) {
            AlgebraElement a = rng.element(3, 3);
            AlgebraElement x = rng.kernel_eps_element(2, 2);
            MuScalar c = rng.scalar(1);
            if (!(rho(a + r * x + AlgebraElement(c)) == rho(a))) ok = false;
        }
        rep.add("pi_preimage_stable", ok);
    }

    // section basics
    {
        bool ok = true;
        const auto& l1 = ctx.section_basis(1);
        ok = ok && (int)l1.size() == 3;
        // gamma lies in L_1
        MonoIndexer ix;
        for (auto& e : l1) ix.vectorize(e);
        AlgebraElement g = AlgebraElement::generator(Gen::G);
        ix.vectorize(g);
        EchelonBasis eb(ix.size());
        for (auto& e : l1) eb.add(ix.vectorize_fixed(e));
        ok = ok && eb.contains(ix.vectorize_fixed(g));
        rep.add("section_triplet", ok);

        bool round = true;
        for (int i = 0; i < 8; ++i) {
            FormCoords c;
            int idx = (int)rng.range(0, ctx.flat_size() - 1);
            c[idx] = rng.scalar_nonzero(1);
            int idx2 = (int)rng.range(0, ctx.flat_size() - 1);
            c = coords_add(c, FormCoords{{idx2, rng.scalar(1)}}, MuScalar(1));
            AlgebraElement q = ctx.from_coords(c);
            AlgebraElement ell = ctx.section_inverse(q);
            if (!(rho(ell) == q)) round = false;
        }
        rep.add("section_inverse_round_trip", round);
        rep.add("eta_plus_preimage",
                ctx.section_inverse(etap.q_rep) == AlgebraElement::generator(Gen::G));
    }

    // the four delta displays
    {
        auto dd = [&](const InvariantForm& f) { return ctx.embedded_differential(f); };
        Tensor2Form d_eps = dd(eps), d_p = dd(etap), d_0 = dd(eta), d_m = dd(etam);
        FormCoords eme = coords_add(ce, c0, -ms_mu_pow(2));  // eps - mu^2 eta
        FormCoords epe = coords_add(ce, c0, MuScalar(1));    // eps + eta
        Tensor2Form expect_p =
            outer_coords(eme, cp, -inv1m2) + outer_coords(cp, epe, -inv1m2);
        Tensor2Form expect_m =
            outer_coords(cm, eme, -inv1m2) + outer_coords(epe, cm, -inv1m2);
        Tensor2Form expect_e = outer_coords(ce, ce, -inv1m2) +
                               outer_coords(c0, c0, -(ms_mu_pow(2) * inv1m2)) +
                               outer_coords(cp, cm, ms_mu()) +
                               outer_coords(cm, cp, ms_mu_pow(3));
        Tensor2Form expect_0 = outer_coords(ce, c0, -inv1m2) +
                               outer_coords(c0, ce, -inv1m2) +
                               outer_coords(c0, c0, -((MuScalar(1) - ms_mu_pow(2)) * inv1m2)) +
                               outer_coords(cp, cm, -ms_mu()) + outer_coords(cm, cp, ms_mu());
        rep.add("delta_eta_plus_display", d_p == expect_p);
        rep.add("delta_eta_minus_display", d_m == expect_m);
        rep.add("delta_epsilon_display", d_eps == expect_e);
        rep.add("delta_eta_display", d_0 == expect_0);
    }

    // omega coaction
    {
        // varpi(eps) = eps (x) 1: the expansion has a single singlet entry
        // carrying the eps coefficient times the unit of A
        auto via_delta = ctx.omega_coaction(eps);
        auto c = ctx.coords(eps.q_rep);
        bool ok = via_delta.size() == 1 && via_delta.count(0) &&
                  via_delta.at(0) == AlgebraElement(c.at(0));
        rep.add("omega_coaction_of_epsilon", ok);

        bool agree = true, closure = true, axioms = true;
        for (int k = 0; k <= cutoff; ++k)
            for (int m = -k; m <= k; ++m) {
                InvariantForm f = ctx.form_from_q(ctx.harmonic(k, m));
                f.preimage = ctx.section_inverse(f.q_rep);
                auto a1 = ctx.omega_coaction(f);
                auto a2 = ctx.omega_coaction_via_ad(f);
                if (!(a1 == a2)) agree = false;
                for (auto& [i, cc] : a1)
                    if (CalculusContext::unflat(i).first != k) closure = false;
            }
        // right coaction axioms on the Q representative level:
        // (varpi (x) id) varpi = (id (x) Delta) varpi reduces to
        // coassociativity of Delta on Q, checked in the hopf suite; verify
        // the counit law here
        for (int i = 0; i < ctx.flat_size(); ++i) {
            auto [k, m] = CalculusContext::unflat(i);
            auto a1 = ctx.omega_coaction(ctx.form_from_q(ctx.harmonic(k, m)));
            AlgebraElement back;
            FormCoords fc;
            for (auto& [j, cc] : a1) {
                MuScalar e = counit(cc);
                if (!e.is_zero()) fc[j] = e;
            }
            if (!(ctx.from_coords(fc) == ctx.harmonic(k, m))) axioms = false;
        }
        rep.add("omega_routes_agree", agree);
        rep.add("omega_multiplet_closure", closure);
        rep.add("omega_counit_law", axioms);
    }

    // circ action
    {
        bool unital = true, action = true, starrule = true;
        for (int i = 0; i < 6; ++i) {
            int idx = (int)rng.range(0, ctx.flat_size() - 1);
            auto [k, m] = CalculusContext::unflat(idx);
            InvariantForm f = ctx.form_from_q(ctx.harmonic(k, m));
            AlgebraElement a = rng.element(2, 2), b = rng.element(2, 2);
            if (!(ctx.circ_action(f, AlgebraElement::one()).q_rep == f.q_rep)) unital = false;
            InvariantForm lhs = ctx.circ_action(ctx.circ_action(f, a), b);
            InvariantForm rhs = ctx.circ_action(f, a * b);
            if (!(lhs.q_rep == rhs.q_rep)) action = false;
            // (theta o a)* = theta* o kappa(a)*
            InvariantForm l2 = ctx.star_form(ctx.circ_action(f, a));
            InvariantForm r2 = ctx.circ_action(ctx.star_form(f), star(antipode(a)));
            if (!(l2.q_rep == r2.q_rep)) starrule = false;
        }
        rep.add("circ_unital", unital);
        rep.add("circ_right_action", action);
        rep.add("circ_star_rule", starrule);
    }

    // star and varkappa
    {
        rep.add("star_epsilon", ctx.star_form(eps).q_rep == (-eps.q_rep));
        bool invol = true, shortcut = true;
        for (int i = 0; i < 8; ++i) {
            AlgebraElement a = rng.element(2, 2);
            InvariantForm f = ctx.pi_project(a);
            if (!(ctx.star_form(ctx.star_form(f)).q_rep == f.q_rep)) invol = false;
            if (!(ctx.star_form(f).q_rep == -star(f.q_rep))) shortcut = false;
            if (!(ctx.varkappa(f).q_rep == -antipode_sq(f.q_rep))) shortcut = false;
        }
        rep.add("star_involutive", invol);
        rep.add("star_and_varkappa_shortcuts", shortcut);

        // delta varkappa = -(varkappa (x) varkappa) delta
        bool twist = true;
        for (int i = 0; i < ctx.flat_size(); ++i) {
            auto [k, m] = CalculusContext::unflat(i);
            InvariantForm f = ctx.form_from_q(ctx.harmonic(k, m));
            Tensor2Form lhs = ctx.embedded_differential(ctx.varkappa(f));
            Tensor2Form rhs;
            for (auto& [ij, c] : ctx.delta_basis(i).terms) {
                auto [k1, m1] = CalculusContext::unflat(ij.first);
                auto [k2, m2] = CalculusContext::unflat(ij.second);
                FormCoords f1 =
                    ctx.coords(ctx.varkappa(ctx.form_from_q(ctx.harmonic(k1, m1))).q_rep);
                FormCoords f2 =
                    ctx.coords(ctx.varkappa(ctx.form_from_q(ctx.harmonic(k2, m2))).q_rep);
                rhs = rhs + outer_coords(f1, f2, -c);
            }
            if (!(lhs == rhs)) twist = false;
        }
        rep.add("delta_varkappa_twist", twist);

        // delta(theta*) = -sum (theta2)* (x) (theta1)*
        bool starswap = true;
        for (int i = 0; i < ctx.flat_size(); ++i) {
            auto [k, m] = CalculusContext::unflat(i);
            InvariantForm f = ctx.form_from_q(ctx.harmonic(k, m));
            Tensor2Form lhs = ctx.embedded_differential(ctx.star_form(f));
            Tensor2Form rhs;
            for (auto& [ij, c] : ctx.delta_basis(i).terms) {
                auto [k1, m1] = CalculusContext::unflat(ij.first);
                auto [k2, m2] = CalculusContext::unflat(ij.second);
                FormCoords f2s =
                    ctx.coords(ctx.star_form(ctx.form_from_q(ctx.harmonic(k2, m2))).q_rep);
                FormCoords f1s =
                    ctx.coords(ctx.star_form(ctx.form_from_q(ctx.harmonic(k1, m1))).q_rep);
                rhs = rhs + outer_coords(f2s, f1s, -conj(c));
            }
            if (!(lhs == rhs)) starswap = false;
        }
        rep.add("delta_star_rule", starswap);
    }

    // varpi intertwines delta
    {
        bool ok = true;
        for (int i = 0; i < ctx.flat_size(); ++i) {
            const Tensor2Form& d = ctx.delta_basis(i);
            // rhs: (delta (x) id) varpi(theta_i): expand varpi legs
            auto [k, m] = CalculusContext::unflat(i);
            const auto& varpi = ctx.omega_basis(i);
            std::map<std::pair<int, int>, AlgebraElement> rhs;
            for (auto& [l, cl] : varpi)
                for (auto& [ij, c] : ctx.delta_basis(l).terms) {
                    auto [it, fresh] = rhs.try_emplace(ij, cl * c);
                    if (!fresh) it->second += cl * c;
                }
            // lhs: varpi(x)2 applied to delta: sum over pairs of Delta on both legs
            std::map<std::pair<int, int>, AlgebraElement> lhs;
            for (auto& [ij, c] : d.terms) {
                auto [k1, m1] = CalculusContext::unflat(ij.first);
                auto [k2, m2] = CalculusContext::unflat(ij.second);
                const auto& v1 = ctx.omega_basis(CalculusContext::flat(k1, m1));
                const auto& v2 = ctx.omega_basis(CalculusContext::flat(k2, m2));
                for (auto& [a1, ca] : v1)
                    for (auto& [b1, cb] : v2) {
                        AlgebraElement prod = ca * cb * c;
                        auto [it, fresh] = lhs.try_emplace(std::make_pair(a1, b1), prod);
                        if (!fresh) it->second += prod;
                    }
            }
            for (auto it = lhs.begin(); it != lhs.end();)
                it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
            for (auto it = rhs.begin(); it != rhs.end();)
                it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
            if (!(lhs == rhs)) ok = false;
        }
        rep.add("delta_intertwines_coaction", ok);
    }

    // wedge and the invariant differential
    {
        bool generators_die = true;
        AlgebraElement r = rhat_generator();
        for (int i = 0; i < 6; ++i) {
            AlgebraElement x = rng.kernel_eps_element(cutoff, 2);
            Tensor2Form q;
            Tensor d = comultiply(r * x);
            for (auto& [key, c] : d.terms()) {
                FormCoords f1 = ctx.coords(rho(key[0]));
                if (f1.empty()) continue;
                FormCoords f2 = ctx.coords(rho(key[1]));
                q = q + outer_coords(f1, f2, c);
            }
            if (!ctx.wedge2_reduce(q).rep.is_zero()) generators_die = false;
        }
        rep.add("wedge_relations_vanish", generators_die);

        // the relation ideal is stable under the circ action, so the module
        // structure descends to the wedge ((theta eta) o a expands slotwise)
        bool circ_stable = true;
        for (int i = 0; i < 4; ++i) {
            AlgebraElement x = rng.kernel_eps_element(std::max(0, cutoff - 1), 2);
            Tensor2Form q;
            Tensor d = comultiply(r * x);
            for (auto& [key, c] : d.terms()) {
                FormCoords f1 = ctx.coords(rho(key[0]));
                if (f1.empty()) continue;
                FormCoords f2 = ctx.coords(rho(key[1]));
                q = q + outer_coords(f1, f2, c);
            }
            AlgebraElement b = rng.element(1, 2);
            if (!ctx.wedge2_reduce(tensor2_circ(ctx, q, b)).rep.is_zero())
                circ_stable = false;
        }
        rep.add("wedge_circ_stability", circ_stable);

        bool dinv = true, stable = true;
        for (int i = 0; i < ctx.flat_size(); ++i) {
            auto [k, m] = CalculusContext::unflat(i);
            InvariantForm f = ctx.form_from_q(ctx.harmonic(k, m));
            Wedge2Form lhs = ctx.wedge2_reduce(ctx.delta_basis(i));
            Wedge2Form rhs = ctx.d_inv(f);
            if (!(lhs == rhs)) dinv = false;
            // preimage independence
            AlgebraElement pre = ctx.preimage_of(f);
            AlgebraElement shifted = pre + rhat_generator() * rng.kernel_eps_element(
                                                                  std::max(0, cutoff - 1), 2);
            if (!(ctx.d_inv_with_preimage(shifted) == rhs)) stable = false;
        }
        rep.add("wedge_reduce_of_delta_is_d", dinv);
        rep.add("d_preimage_independent", stable);
    }

    // selection rule and the d_n component structure
    {
        bool sel = true;
        for (int n = 0; n <= cutoff; ++n)
            if (!ctx.selection_rule_check(n)) sel = false;
        rep.add("selection_rule", sel);

        bool dn_ok = true;
        for (int n = 1; n <= std::min(cutoff, 2); ++n) {
            std::optional<MuScalar> dn;
            for (int m = -n; m <= n; ++m) {
                int i = CalculusContext::flat(n, m);
                const Tensor2Form& d = ctx.delta_basis(i);
                // the (0,n) block must be d_n * eps (x) theta
                MuScalar eps_c = ctx.coords(eps.q_rep).at(0);
                MuScalar c0n, cn0;
                for (auto& [ij, c] : d.terms) {
                    if (ij.first == 0) {
                        if (ij.second != i) dn_ok = false;
                        else c0n = c;
                    }
                    if (ij.second == 0) {
                        if (ij.first != i) dn_ok = false;
                        else cn0 = c;
                    }
                }
                MuScalar val = c0n / eps_c;
                if (!(c0n == cn0)) dn_ok = false;
                if (!is_real(val) || val.is_zero()) dn_ok = false;
                if (!dn)
                    dn = val;
                else if (!(*dn == val))
                    dn_ok = false;
            }
        }
        rep.add("dn_transpose_symmetry", dn_ok);
    }

    // scalar product, gram weights and the conjugation
    {
        bool gram_matches = true;
        for (int k = 0; k <= cutoff; ++k)
            for (int m = -k; m <= k; ++m) {
                MuScalar expect = qfact(k + std::abs(m)) / qfact(k - std::abs(m));
                if (!(ctx.gram_weight(k, m) == expect)) gram_matches = false;
            }
        rep.add("gram_matches_prefactors", gram_matches,
                "invariant Gram diagonal equals (k+|m|)_mu!/(k-|m|)_mu!");

        bool orth = true;
        for (int k = 0; k <= cutoff; ++k)
            for (int m = -k; m <= k; ++m)
                for (int m2 = -k; m2 <= k; ++m2) {
                    InvariantForm a = ctx.form_from_q(ctx.harmonic(k, m));
                    InvariantForm b = ctx.form_from_q(ctx.harmonic(k, m2));
                    MuScalar v = ctx.scalar_product(a, b);
                    MuScalar expect =
                        (m == m2) ? ctx.harmonic_scale2(k, m).inv() : MuScalar();
                    if (!(v == expect)) orth = false;
                }
        rep.add("declared_orthonormality", orth);

        // sum_i e_i (x) bar(e_i) is invariant, computed through the bar matrix
        bool barinv = true, barsq = true;
        for (int k = 0; k <= cutoff; ++k) {
            const auto& B = ctx.bar_matrix(k);
            int d = 2 * k + 1;
            // invariance: sum_i R_i z_i (x) bar(z_i) transforms trivially
            std::map<std::pair<int, int>, AlgebraElement> lhs;
            for (int i = 0; i < d; ++i) {
                MuScalar ri = ctx.harmonic_scale2(k, i - k);
                for (int j = 0; j < d; ++j) {
                    if (B[j][i].is_zero()) continue;
                    // element R_i B[j][i] z_i (x) z_j: apply varpi (x) varpi
                    const auto& v1 = ctx.omega_basis(CalculusContext::flat(k, i - k));
                    const auto& v2 = ctx.omega_basis(CalculusContext::flat(k, j - k));
                    for (auto& [a1, ca] : v1)
                        for (auto& [b1, cb] : v2) {
                            AlgebraElement prod = ca * cb * (ri * B[j][i]);
                            auto key = std::make_pair(a1, b1);
                            auto [it, fresh] = lhs.try_emplace(key, prod);
                            if (!fresh) it->second += prod;
                        }
                }
            }
            // expected: the same element tensored with 1
            for (int i = 0; i < d && barinv; ++i) {
                MuScalar ri = ctx.harmonic_scale2(k, i - k);
                for (int j = 0; j < d; ++j) {
                    auto key = std::make_pair(CalculusContext::flat(k, i - k),
                                              CalculusContext::flat(k, j - k));
                    AlgebraElement expect = AlgebraElement(ri * B[j][i]);
                    AlgebraElement got = lhs.count(key) ? lhs.at(key) : AlgebraElement();
                    if (expect.is_zero() ? !got.is_zero() : !(got == expect)) barinv = false;
                }
            }
            // bar . bar = id on the multiplet
            for (int i = 0; i < d; ++i) {
                InvariantForm f = ctx.form_from_q(ctx.harmonic(k, i - k));
                InvariantForm b2 = ctx.conjugation_bar(ctx.conjugation_bar(f));
                if (!(b2.q_rep == f.q_rep)) barsq = false;
            }
        }
        rep.add("bar_invariant_element", barinv);
        rep.add("bar_involutive", barsq);
    }

    // nu values and rho-tilde injectivity
    {
        rep.add("nu_epsilon", ctx.nu(eps) == ms_rat(Rat(-1, 2)) + ms_mu_pow(2) * ms_rat(Rat(1, 2)));
        bool inj = true;
        for (int i = 0; i < 8; ++i) {
            FormCoords c;
            c[(int)rng.range(0, ctx.flat_size() - 1)] = rng.scalar_nonzero(1);
            if (!(ctx.coords(ctx.from_coords(c)) == c)) inj = false;
        }
        rep.add("coords_round_trip", inj);
    }

    // multiplet dimensions: pi(A_n) = sum of spins <= n-1
    {
        bool dims = true;
        HopfContext& h = ctx.hopf();
        int nmax = std::min(cutoff + 1, 4);
        const auto& blocks = h.peter_weyl(nmax);
        // n = 1 degenerates: pi kills constants
        dims = dims && rho(blocks[0].basis[0]).is_zero();
        for (int n = 2; n <= nmax; ++n) {
            MonoIndexer qix;
            for (auto& b : blocks[n - 1].basis) qix.vectorize(rho(b));
            EchelonBasis eb(qix.size());
            for (auto& b : blocks[n - 1].basis) eb.add(qix.vectorize_fixed(rho(b)));
            size_t expect = 0;
            for (int k = 0; k <= n - 1; ++k) expect += 2 * k + 1;
            if (eb.rank() != expect) dims = false;
            // containment in the harmonic span of spins <= n-1
            for (auto& b : blocks[n - 1].basis) {
                FormCoords c = ctx.coords(rho(b));
                for (auto& [i, s] : c)
                    if (CalculusContext::unflat(i).first > n - 1) dims = false;
            }
        }
        rep.add("pi_of_peter_weyl_blocks", dims);
    }
    return rep;
}

}  // namespace qsu2
