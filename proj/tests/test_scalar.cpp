#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsu2/random.hpp"
#include "qsu2/scalar.hpp"
#include "qsu2/suites.hpp"

using namespace qsu2;

TEST_CASE("q-integers") {
    CHECK(qint(1) == MuScalar(1));
    CHECK(qint(2) == MuScalar(1) + ms_mu_pow(2));
    CHECK(qint(3) == MuScalar(1) + ms_mu_pow(2) + ms_mu_pow(4));
    CHECK_THROWS_AS(qint(0), RangeError);
    CHECK_THROWS_AS(qint(-2), RangeError);
    // the defining quotient form is exact
    for (int j = 1; j <= 6; ++j) {
        MuScalar q = (MuScalar(1) - ms_mu_pow(2 * j)) / (MuScalar(1) - ms_mu_pow(2));
        CHECK(q == qint(j));
    }
}

TEST_CASE("q-factorial") {
    CHECK(qfact(0) == MuScalar(1));
    CHECK(qfact(2) == MuScalar(1) + ms_mu_pow(2));
    CHECK(qfact(3) == (MuScalar(1) + ms_mu_pow(2)) *
                          (MuScalar(1) + ms_mu_pow(2) + ms_mu_pow(4)));
    CHECK_THROWS_AS(qfact(-1), RangeError);
}

TEST_CASE("quantum derivative") {
    CHECK(qderiv(XPoly(MuScalar(1))).is_zero());
    CHECK(qderiv(XPoly::monomial(2, MuScalar(1))) == XPoly::monomial(1, qint(2)));
    XPoly p = XPoly::monomial(3, MuScalar(1)) + XPoly::monomial(1, MuScalar(1));
    XPoly expect = XPoly::monomial(2, qint(3)) + XPoly(MuScalar(1));
    CHECK(qderiv(p) == expect);
}

TEST_CASE("exact evaluation") {
    CHECK(eval_at(qint(2), Rat(1, 2)) == GaussRat(Rat(5, 4)));
    CHECK(eval_at(MuScalar(1) / (MuScalar(1) + ms_mu_pow(2)), Rat(1, 2)) ==
          GaussRat(Rat(4, 5)));
    CHECK(eval_at(MuScalar(), Rat(1, 3)) == GaussRat(0));
    CHECK_THROWS_AS(eval_at(qint(2), Rat(0)), RangeError);
    CHECK_THROWS_AS(eval_at(qint(2), Rat(3, 2)), RangeError);
    // pole detection
    MuScalar pole = MuScalar(1) / (ms_mu() - ms_rat(Rat(1, 2)));
    CHECK_THROWS_AS(eval_at(pole, Rat(1, 2)), PoleError);
}

TEST_CASE("canonical form") {
    // gcd-reduced, monic denominator
    MuScalar a(MuPoly{std::vector<GaussRat>{GaussRat(0), GaussRat(2)}},
               MuPoly{std::vector<GaussRat>{GaussRat(0), GaussRat(0), GaussRat(4)}});
    CHECK(a.den().leading() == GaussRat(1));
    CHECK(a == MuScalar(1) / (ms_mu() * ms_int(2)));
    // equality agrees with cross multiplication
    MuScalar b = ms_mu_pow(2) / ms_mu();
    CHECK(b == ms_mu());
}

TEST_CASE("conjugation fixes mu and flips i") {
    MuScalar s = (ms_i() * ms_mu() + MuScalar(1)) / (ms_mu() - ms_i());
    MuScalar c = conj(s);
    CHECK(conj(c) == s);
    CHECK(conj(ms_mu()) == ms_mu());
    CHECK(conj(ms_i()) == -ms_i());
    CHECK(is_real(s * c));
}

TEST_CASE("exact square roots") {
    MuScalar sq = (MuScalar(1) + ms_mu_pow(2)) * (MuScalar(1) + ms_mu_pow(2)) /
                  (ms_mu_pow(4));
    auto r = ms_sqrt(sq);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == sq);
    CHECK(!ms_sqrt(ms_mu()).has_value());
}

TEST_CASE("scalar property suite") {
    Report r = suite_scalar(7);
    for (auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("sturm root counting") {
    // (x-1)(x+1)x has all roots in [-2,2]
    std::vector<Rat> p{0, -1, 0, 1};
    CHECK(real_roots_in_interval(p, Rat(-2), Rat(2)) == 3);
    CHECK(real_roots_in_interval(p, Rat(1, 2), Rat(2)) == 1);
    std::vector<Rat> q{-9, 0, 1};  // roots +-3
    CHECK(real_roots_in_interval(q, Rat(-2), Rat(2)) == 0);
}
