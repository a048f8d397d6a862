#include "qsu2/suites.hpp"

namespace qsu2 {

namespace {

// exact block rotation matrices that are unitary over the Gaussian rationals:
// built from (c,s) with c^2 + s^2 = 1 and unit-modulus phases
std::vector<std::vector<MuScalar>> random_unitary(Rng& rng, int d) {
    std::vector<std::vector<MuScalar>> u(d, std::vector<MuScalar>(d));
    for (int i = 0; i < d; ++i) u[i][i] = MuScalar(1);
    auto apply_rotation = [&](int a, int b) {
        Rat t = rng.nonzero_rat(3, 2);
        Rat den = 1 + t * t;
        MuScalar c = ms_rat((1 - t * t) / den), s = ms_rat(2 * t / den);
        Rat p = rng.nonzero_rat(3, 2);
        MuScalar ph = (ms_rat(p) + ms_i()) / (ms_rat(p) - ms_i());
        for (int j = 0; j < d; ++j) {
            MuScalar ua = u[a][j], ub = u[b][j];
            u[a][j] = c * ua + s * ph * ub;
            u[b][j] = -(s * conj(ph)) * ua + c * ub;
        }
    };
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) apply_rotation(a, b);
    return u;
}

FieldExpression sym_combo(SymKind kind, const FormCoords& c, int dim) {
    FieldExpression r(dim);
    for (auto& [i, s] : c) r += FieldExpression::symbol(kind, i, dim) * s;
    return r;
}

}  // namespace

Report suite_gauge(int cutoff, int dim, uint64_t seed) {
    Report rep{"gauge", {}};
    Rng rng(seed);
    CalculusContext calc(cutoff);
    GaugeContext g(calc, dim);

    // differential algebra sanity: d^2 = 0 and the graded Leibniz rule
    {
        bool dd = true, leibniz = true;
        for (int i = 0; i < 10; ++i) {
            FieldExpression e(dim);
            for (int t = 0; t < 3; ++t) {
                SymKind k = (SymKind)(int)rng.range(0, 3);
                int idx = (int)rng.range(0, calc.flat_size() - 1);
                FieldExpression s = FieldExpression::symbol(k, idx, dim) * rng.chart_fn(2);
                e += (t == 0) ? s : e * s;
            }
            if (!e.d().d().is_zero()) dd = false;
            FieldExpression f = FieldExpression::symbol(SymKind::A, 0, dim) * rng.chart_fn(1);
            FieldExpression lhs = (e * f).d();
            int deg = e.degree() < 0 ? 0 : e.degree();
            FieldExpression rhs = e.d() * f +
                                  ((deg % 2) ? -(e * f.d()) : e * f.d());
            if (!(lhs == rhs)) leibniz = false;
        }
        rep.add("d_squared_zero", dd);
        rep.add("graded_leibniz", leibniz);
    }

    auto A = g.free_connection();
    auto F = g.curvature(A);
    FormCoords ce = calc.coords(calc.epsilon_form().q_rep);
    FormCoords cp = calc.coords(calc.eta_plus_form().q_rep);
    FormCoords c0 = calc.coords(calc.eta_form().q_rep);
    FormCoords cm = calc.coords(calc.eta_minus_form().q_rep);

    // curvature displays
    {
        auto combineF = [&](const FormCoords& c) {
            FieldExpression r(dim);
            for (auto& [i, s] : c) r += F.at(i) * s;
            return r;
        };
        bool ok = true;
        ok = ok && combineF(c0) == sym_combo(SymKind::DA, c0, dim) +
                                       (sym_combo(SymKind::A, cp, dim) *
                                        sym_combo(SymKind::A, cm, dim)) *
                                           (ms_int(2) * ms_mu());
        ok = ok && combineF(ce) == sym_combo(SymKind::DA, ce, dim) +
                                       (sym_combo(SymKind::A, cm, dim) *
                                        sym_combo(SymKind::A, cp, dim)) *
                                           (ms_mu() * (MuScalar(1) - ms_mu_pow(2)));
        ok = ok && combineF(cp) == sym_combo(SymKind::DA, cp, dim) +
                                       sym_combo(SymKind::A, cp, dim) *
                                           sym_combo(SymKind::A, c0, dim);
        ok = ok && combineF(cm) == sym_combo(SymKind::DA, cm, dim) +
                                       sym_combo(SymKind::A, c0, dim) *
                                           sym_combo(SymKind::A, cm, dim);
        rep.add("curvature_displays", ok);

        auto Fz = g.curvature(g.zero_connection());
        bool allzero = true;
        for (auto& [i, fi] : Fz)
            if (!fi.is_zero()) allzero = false;
        rep.add("zero_connection_flat", allzero);
    }

    // bracket with a zero argument vanishes
    {
        auto zero = g.zero_connection();
        bool ok = true;
        for (int i = 0; i < calc.flat_size(); ++i)
            if (!g.bracket(zero.value, A.value, i).is_zero()) ok = false;
        rep.add("bracket_zero", ok);
    }

    // lagrangian: singlet truncation and basis independence
    {
        std::map<int, FieldExpression> singletF{{0, F.at(0)}};
        FieldExpression l0 = g.lagrangian(singletF);
        FieldExpression expect =
            (F.at(0) * FieldExpression::symbol(SymKind::S, 0, dim)) * g.scale2(0);
        rep.add("lagrangian_singlet_truncation", l0 == expect);

        // invariance under a random exact unitary rotation within a multiplet:
        // F(e'_j) = sum O_ij F(e_i), S'(j) = sum conj(O_ij) S(i), with the e
        // basis the literal orthonormal one; in engine indices the same O acts
        // on the rescaled symbols via the scale weights.
        bool invariant = true;
        for (int k = 1; k <= std::min(cutoff, 2); ++k) {
            int d = 2 * k + 1;
            auto O = random_unitary(rng, d);
            // check O is unitary
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    MuScalar acc;
                    for (int c = 0; c < d; ++c) acc += O[a][c] * conj(O[b][c]);
                    if (!(acc == (a == b ? MuScalar(1) : MuScalar()))) invariant = false;
                }
            // engine-level lagrangian restricted to multiplet k in the
            // literal basis: L_k = sum_m F(e_m) S(e_m) = sum_m R_m F~(m) S~(m)
            FieldExpression L(dim);
            for (int m = 0; m < d; ++m) {
                int idx = CalculusContext::flat(k, m - k);
                L += (FieldExpression::symbol(SymKind::DA, idx, dim) *
                      FieldExpression::symbol(SymKind::S, idx, dim)) *
                     g.scale2(idx);
            }
            // rotated: F(e'_j) = sum_m O_mj F(e_m) with F(e_m) = r_m F~(m);
            // expressed through engine symbols the sqrt scales pair up into
            // rational combinations R-weights
            // assemble sum_j F(e'_j) S(e'_j) as a double sum; the j-sum
            // collapses the r_m r_n prefactors through unitarity
            FieldExpression L2(dim);
            for (int m = 0; m < d; ++m)
                for (int n = 0; n < d; ++n) {
                    MuScalar acc;
                    for (int j = 0; j < d; ++j) acc += O[m][j] * conj(O[n][j]);
                    if (acc.is_zero()) continue;
                    // r_m r_n factor: only the diagonal survives for exactness
                    if (m != n) {
                        invariant = false;
                        continue;
                    }
                    int im = CalculusContext::flat(k, m - k);
                    L2 += (FieldExpression::symbol(SymKind::DA, im, dim) *
                           FieldExpression::symbol(SymKind::S, im, dim)) *
                          (acc * g.scale2(im));
                }
            if (!(L == L2)) invariant = false;
        }
        rep.add("lagrangian_basis_independent", invariant);
    }

    // equations of motion
    {
        auto eq = g.equations_of_motion();
        rep.add("singlet_equation_free",
                eq.at(0) == FieldExpression::symbol(SymKind::DS, 0, dim));
        // only antisymmetrized coefficients enter
        bool antisym = true;
        for (int k = 0; k < calc.flat_size(); ++k)
            for (int i = 0; i < calc.flat_size(); ++i)
                for (int j = 0; j < calc.flat_size(); ++j) {
                    MuScalar direct = g.calculus().eom_coeff(i, j, k);
                    MuScalar swapped = (g.calculus().d_coeff(j, k, i) -
                                        g.calculus().d_coeff(k, j, i)) *
                                       ms_rat(Rat(1, 2));
                    if (!(direct == swapped)) antisym = false;
                }
        rep.add("eom_antisymmetrized", antisym);

        // selection structure: A(j) *F(i) terms appear in equation k only for
        // multiplets with |spin_i - spin_k| <= spin_j <= spin_i + spin_k
        bool sel = true;
        for (auto& [k, e] : eq) {
            int sk = CalculusContext::unflat(k).first;
            for (auto& [term, c] : e.terms()) {
                int si = -1, sj = -1;
                for (auto& s : term) {
                    if (s.kind == SymKind::A) sj = CalculusContext::unflat(s.index).first;
                    if (s.kind == SymKind::S) si = CalculusContext::unflat(s.index).first;
                }
                if (si < 0 || sj < 0) continue;
                if (std::abs(si - sk) > sj || sj > si + sk) sel = false;
            }
        }
        rep.add("eom_selection_structure", sel);
    }

    // gauge transformations
    {
        ChartCharacter id = ChartCharacter::identity();
        auto A1 = g.gauge_transform(A, id);
        bool identity_fixed = true;
        for (auto& [i, ai] : A.value)
            if (!(A1.at(i) == ai)) identity_fixed = false;
        rep.add("identity_character_fixes_connection", identity_fixed);

        ChartCharacter ch = rng.chart_character(2);
        auto A2 = g.gauge_transform(A, ch);
        auto F2 = g.curvature(A2);
        auto F2_expect = g.covariant_transform(F, ch);
        bool covariant = true;
        for (auto& [i, fi] : F2)
            if (!(fi == F2_expect.at(i))) covariant = false;
        rep.add("curvature_covariance", covariant);

        // lagrangian invariance: assemble sum_i R_i F'(i) S'(i) with the
        // S-symbols transformed through the bar-conjugated coaction and
        // compare with the untransformed lagrangian
        bool linv = true;
        FieldExpression L(dim), L2(dim);
        for (int i = 0; i < calc.flat_size(); ++i)
            L += (F.at(i) * FieldExpression::symbol(SymKind::S, i, dim)) * g.scale2(i);
        for (int i = 0; i < calc.flat_size(); ++i) {
            auto [k, m] = CalculusContext::unflat(i);
            const auto& C = calc.coaction_matrix(k);
            const auto& B = calc.bar_matrix(k);
            // S'(i) corresponds to *F'(bar e_i): bar e_i = sum_j B[j][i] e_j
            // and F'(theta) = sum F(theta_l) gamma(c_l); combining,
            // S'(i) = sum_{j,l} conj(B[j][i]) ... ; work directly with
            // *F'(bar zeta_i) = sum_j conj? -- the transform of the map
            // theta -> *F(theta) is theta -> sum *F(theta_l) gamma(c_l),
            // applied to the (antilinearly expanded) bar vector.
            FieldExpression sprime(dim);
            for (int j = 0; j < 2 * k + 1; ++j) {
                if (B[j][i - CalculusContext::flat(k, -k)].is_zero()) continue;
                MuScalar bj = B[j][i - CalculusContext::flat(k, -k)];
                for (int l = 0; l < 2 * k + 1; ++l) {
                    ChartFn gc = chart_char_eval(ch, C[l][j]);
                    if (gc.is_zero()) continue;
                    sprime += FieldExpression::symbol(
                                  SymKind::S, CalculusContext::flat(k, l - k), dim) *
                              (gc * chart_const(bj));
                }
            }
            // recover S'(i) in terms of the bar of the rotated basis: fold the
            // inverse bar to land back on S-symbols:  *F(bar zeta_l) carries
            // index l directly, so expand bar zeta_i -> sum_j B[j][i] zeta_j,
            // transform zeta_j covariantly, and rewrite zeta_l = sum B^{-1}
            // ... equivalently assemble through S-symbols as above.
            FieldExpression fprime = F2_expect.at(i);
            L2 += (fprime * sprime) * g.scale2(i);
        }
        linv = (L2 == L);
        rep.add("lagrangian_gauge_invariance", linv,
                "transforms assembled through the bar leg of the coaction");
    }

    // quantum invariance and decoupling
    rep.add("quantum_invariance", g.quantum_invariance_check());
    rep.add("singlet_decoupling", g.singlet_decoupling_check());

    // split connection
    {
        auto [cl, perp] = g.split_connection(A);
        InvariantForm eps = calc.epsilon_form();
        FormCoords ec = calc.coords(eps.q_rep);
        // A_perp(eps) = 0
        FieldExpression aeps(dim);
        for (auto& [i, s] : ec) aeps += perp.at(i) * s;
        bool perp_eps = aeps.is_zero();
        // A_cl vanishes on ker(nu): test on a spanning set of ker nu
        bool cl_ker = true;
        for (int i = 0; i < calc.flat_size(); ++i) {
            auto [k, m] = CalculusContext::unflat(i);
            InvariantForm zi = calc.form_from_q(calc.harmonic(k, m));
            MuScalar nu_i = calc.nu(zi);
            MuScalar nu_eps = calc.nu(eps);
            // the ker(nu) vector zeta_i - (nu_i/nu_eps) eps
            FieldExpression v = cl.at(i);
            for (auto& [j, s] : ec) v -= cl.at(j) * (s * nu_i / nu_eps);
            if (!v.is_zero()) cl_ker = false;
        }
        // idempotence: splitting the perp part has no classical component
        auto [cl2, perp2] = g.split_connection(perp);
        bool idem = true;
        for (auto& [i, e] : cl2.value)
            if (!e.is_zero()) idem = false;
        rep.add("split_perp_epsilon", perp_eps);
        rep.add("split_classical_kernel", cl_ker);
        rep.add("split_idempotent", idem);
    }

    // beta transform and the envelope model
    {
        BetaEngine be(g);
        auto beta = be.beta_connection(A);
        // zero potential: only the structural terms 1 (x) 1 (x) theta and
        // 1 (x) theta_k (x) c_k remain
        auto beta0 = be.beta_connection(g.zero_connection());
        bool zero_shape = true;
        for (auto& [i, b] : beta0)
            for (auto& [key, f] : b.terms()) {
                int fdeg = f.degree() <= 0 ? 0 : f.degree();
                if (fdeg != 0) zero_shape = false;
            }
        rep.add("beta_zero_potential_shape", zero_shape);

        // Eq. 411: beta of the curvature equals (F (x) id) varpi followed by
        // id (x) Delta on the coaction leg
        auto bF = be.beta_curvature(F);
        bool eq411 = true;
        for (auto& [i, b] : bF) {
            auto [k, m] = CalculusContext::unflat(i);
            auto varpi = calc.omega_coaction(calc.form_from_q(calc.harmonic(k, m)));
            BetaExpr expect(&be);
            for (auto& [l, cl] : varpi) {
                Tensor dc = comultiply(cl);
                for (auto& [key, cc] : dc.terms())
                    expect.add(EnvSlot{key[0], -1}, EnvSlot{key[1], -1},
                               F.at(l) * chart_const(cc));
            }
            if (!(b == expect)) eq411 = false;
        }
        rep.add("beta_curvature_is_coaction", eq411);

        // contraction with a character reproduces the gauge transformation
        ChartCharacter ch = rng.chart_character(2);
        auto A2 = g.gauge_transform(A, ch);
        bool contraction = true;
        for (auto& [i, b] : beta) {
            ContractedBeta cb = b.contract_middle(ch);
            // expected: sum_l A'(theta_l) (x) c_l + 1 (x) theta_i with
            // A' the transformed potential; compare through the local form
            // pi^ omega'(theta_i) = sum_l A'(l) (x) C[l][i] + 1 (x) theta_i
            auto [k, m] = CalculusContext::unflat(i);
            const auto& C = calc.coaction_matrix(k);
            ContractedBeta expect;
            auto addexp = [&](const EnvSlot& s, const FieldExpression& f) {
                if (f.is_zero()) return;
                auto [it, fresh] = expect.try_emplace(s, f);
                if (!fresh) {
                    it->second += f;
                    if (it->second.is_zero()) expect.erase(it);
                }
            };
            addexp(EnvSlot{Monomial::one(), i},
                   FieldExpression::scalar(ChartFn(1), dim));
            for (int l = 0; l < 2 * k + 1; ++l) {
                const AlgebraElement& c = C[l][m + k];
                for (auto& [mo, cc] : c.terms())
                    addexp(EnvSlot{mo, -1},
                           A2.at(CalculusContext::flat(k, l - k)) * chart_const(cc));
            }
            if (!(cb == expect)) contraction = false;
        }
        rep.add("beta_contraction_reproduces_gauge", contraction);

        // Eq. 412: beta(R) = d beta(omega) - <beta(omega), beta(omega)>
        bool eq412 = true;
        for (int i = 0; i < calc.flat_size(); ++i) {
            BetaExpr lhs = bF.at(i);
            BetaExpr rhs = beta.at(i).d() - be.bracket(beta, beta, i);
            if (!(lhs == rhs)) eq412 = false;
        }
        rep.add("beta_transform_structure_equation", eq412);
    }
    return rep;
}

}  // namespace qsu2
