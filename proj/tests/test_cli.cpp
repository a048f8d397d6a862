#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsu2/json_io.hpp"
#include "qsu2/parser.hpp"
#include "qsu2/random.hpp"

using namespace qsu2;

TEST_CASE("parser basics") {
    // "a g" is the product alpha gamma
    AlgebraElement e = eval_ast_element(*parse("a g"));
    CHECK(e == AlgebraElement::generator(Gen::A) * AlgebraElement::generator(Gen::G));
    // the ideal generator
    e = eval_ast_element(*parse("mu^2 a + a* - (1+mu^2)"));
    CHECK(e == rhat_generator());
    // commutator collapses to zero in normal form
    e = eval_ast_element(*parse("g g* - g* g"));
    CHECK(e.is_zero());
}

TEST_CASE("parser scalars and suffixes") {
    CHECK(eval_ast_element(*parse("1/2 a")).coeff(Monomial::gen(Gen::A)) ==
          ms_rat(Rat(1, 2)));
    CHECK(eval_ast_element(*parse("mu^-1 a*")) ==
          AlgebraElement::generator(Gen::As) * ms_mu_pow(-1));
    CHECK(eval_ast_element(*parse("(a g)*")) ==
          star(AlgebraElement::generator(Gen::A) * AlgebraElement::generator(Gen::G)));
    CHECK(eval_ast_element(*parse("i i")) == AlgebraElement(MuScalar(-1)));
    CHECK(eval_ast_element(*parse("a**")) == AlgebraElement::generator(Gen::A));
    // unicode aliases
    CHECK(eval_ast_element(*parse("α γ*")) ==
          AlgebraElement::generator(Gen::A) * AlgebraElement::generator(Gen::Gs));
    // division by a non-scalar is rejected
    CHECK_THROWS_AS(eval_ast_element(*parse("1/(a)")), Error);
    CHECK_THROWS_AS(parse("a )"), ParseError);
    CHECK_THROWS_AS(parse("^2"), ParseError);
}

TEST_CASE("tensor slots") {
    Tensor t = eval_ast(*parse("a | g + g*"));
    CHECK(t.arity() == 2);
    Tensor expect =
        Tensor::outer(Tensor::from_element(AlgebraElement::generator(Gen::A)),
                      Tensor::from_element(AlgebraElement::generator(Gen::G) +
                                           AlgebraElement::generator(Gen::Gs)));
    CHECK(t == expect);
}

TEST_CASE("parse print round trip") {
    Rng rng(23);
    auto random_expr = [&](auto&& self, int depth) -> std::string {
        if (depth == 0) {
            switch (rng.range(0, 4)) {
                case 0: return "a";
                case 1: return "g*";
                case 2: return "mu";
                case 3: return std::to_string(rng.range(1, 9));
                default: return "i";
            }
        }
        std::string l = self(self, depth - 1), r = self(self, depth - 1);
        switch (rng.range(0, 3)) {
            case 0: return "(" + l + " + " + r + ")";
            case 1: return "(" + l + " " + r + ")";
            case 2: return "(" + l + ")*";
            default: return "(" + l + ")^" + std::to_string(rng.range(0, 3));
        }
    };
    for (int i = 0; i < 30; ++i) {
        std::string s = random_expr(random_expr, 3);
        AstPtr one = parse(s);
        AstPtr two = parse(print_ast(*one));
        CHECK(eval_ast_element(*one) == eval_ast_element(*two));
    }
}

TEST_CASE("json round trips") {
    Rng rng(29);
    for (int i = 0; i < 10; ++i) {
        MuScalar s = rng.scalar(3) / rng.scalar_nonzero(2);
        CHECK(muscalar_from_json(to_json(s)) == s);
        AlgebraElement a = rng.element(3, 3);
        CHECK(algebra_from_json(to_json(a)) == a);
        ChartFn f = rng.chart_fn(2) / (rng.chart_fn(2) + ChartFn(1));
        CHECK(chartfn_from_json(to_json(f)) == f);
    }
    // invariant form export carries multiplet coordinates
    CalculusContext ctx(1);
    Json j = invariant_form_to_json(ctx, ctx.eta_plus_form());
    CHECK(j.at("multiplets").size() == 1);
    CHECK(j.at("multiplets")[0].at("k") == 1);
    CHECK(j.at("multiplets")[0].at("m") == 1);
}
