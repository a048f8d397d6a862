#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsu2/random.hpp"
#include "qsu2/tensor.hpp"

using namespace qsu2;

namespace {
AlgebraElement gen(Gen g) { return AlgebraElement::generator(g); }
}  // namespace

TEST_CASE("defining relations in normal form") {
    auto A = gen(Gen::A), As = gen(Gen::As), G = gen(Gen::G), Gs = gen(Gen::Gs);
    CHECK(A * G == G * A * ms_mu());            // a g = mu g a
    CHECK(G * As == As * G * ms_mu());          // g a* = mu a* g
    CHECK(G * Gs == Gs * G);                    // g g* = g* g
    CHECK(As * A + Gs * G == AlgebraElement::one());
    CHECK(A * As + Gs * G * (ms_mu() * ms_mu()) == AlgebraElement::one());
    // star conjugates
    CHECK(Gs * A == A * Gs * ms_mu_pow(-1));
    CHECK(Gs * As == As * Gs * ms_mu());
    CHECK(G * A == A * G * ms_mu_pow(-1));
}

TEST_CASE("normal form examples") {
    // alpha* alpha -> 1 - g* g, alpha alpha* -> 1 - mu^2 g* g
    AlgebraElement e = normal_form({FreeTerm{{Gen::As, Gen::A}, MuScalar(1)}});
    AlgebraElement expect = AlgebraElement::one();
    expect.add_term(Monomial{0, 0, 1, 1}, MuScalar(-1));
    CHECK(e == expect);
    e = normal_form({FreeTerm{{Gen::A, Gen::As}, MuScalar(1)}});
    expect = AlgebraElement::one();
    expect.add_term(Monomial{0, 0, 1, 1}, -(ms_mu() * ms_mu()));
    CHECK(e == expect);
    // gamma alpha = mu^-1 alpha gamma
    e = normal_form({FreeTerm{{Gen::G, Gen::A}, MuScalar(1)}});
    expect = AlgebraElement();
    expect.add_term(Monomial{0, 1, 1, 0}, ms_mu_pow(-1));
    CHECK(e == expect);
}

TEST_CASE("high cross powers reduce consistently") {
    auto A = gen(Gen::A), As = gen(Gen::As);
    // a^3 a*^3 computed as products in different associations
    AlgebraElement left = ((A * A) * A) * ((As * As) * As);
    AlgebraElement right = A * (A * (A * (As * (As * As))));
    CHECK(left == right);
    // multiply back: (a*^2 a^2)(a* a) vs a*^2 (a^2 a*) a
    AlgebraElement l2 = (As * As * A * A) * (As * A);
    AlgebraElement r2 = As * As * ((A * A * As) * A);
    CHECK(l2 == r2);
}

TEST_CASE("star involution") {
    CHECK(star(gen(Gen::A)) == gen(Gen::As));
    CHECK(star(gen(Gen::G) * ms_i()) == gen(Gen::Gs) * (-ms_i()));
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        AlgebraElement x = rng.element(4, 3);
        CHECK(star(star(x)) == x);
        AlgebraElement y = rng.element(3, 2);
        CHECK(star(x * y) == star(y) * star(x));
    }
}

TEST_CASE("degree and weights") {
    Monomial mo{1, 2, 1, 3};  // a*^2 g g*^3
    CHECK(mo.degree() == 6);
    CHECK(mo.left_weight() == -2 - 1 + 3);
    CHECK(mo.right_weight() == -2 + 1 - 3);
    CHECK(Monomial::one().is_one());
}

TEST_CASE("scalar_value guards") {
    CHECK(AlgebraElement(ms_mu()).scalar_value() == ms_mu());
    CHECK(AlgebraElement().scalar_value() == MuScalar());
    CHECK_THROWS_AS(gen(Gen::A).scalar_value(), Error);
}

TEST_CASE("tensor slot operations") {
    Tensor t = Tensor::outer(Tensor::from_element(gen(Gen::A)),
                             Tensor::from_element(gen(Gen::G)));
    CHECK(t.arity() == 2);
    Tensor m = t.merge_slots(0, 1);
    CHECK(m.arity() == 1);
    CHECK(m.to_element() == gen(Gen::A) * gen(Gen::G));
    Tensor c = t.contract_slot(1, [](const Monomial& mo) { return counit(mo); });
    CHECK(c.arity() == 1);
    CHECK(c.to_element().is_zero());  // eps(g) = 0
}
