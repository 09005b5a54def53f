#include <doctest.h>

#include <random>

#include "ellsurf/error.hpp"
#include "ellsurf/poly.hpp"
#include "test_support.hpp"

using namespace ellsurf;

namespace {

Poly t() { return Poly::variable(); }

// Coefficients read off term by term; compared against the parser.
std::vector<Rational> q(std::initializer_list<Rational> c) { return std::vector<Rational>(c); }

}  // namespace

TEST_CASE("parse_poly reads the documented forms") {
    CHECK(parse_poly("t").coefficients() == q({0, 1}));
    CHECK(parse_poly("4*t^3 + 27").coefficients() == q({27, 0, 0, 4}));
    CHECK(parse_poly("1/2*t^2 - 3").coefficients() == q({-3, 0, Rational(1, 2)}));
    CHECK(parse_poly("-t").coefficients() == q({0, -1}));
    CHECK(parse_poly("  t ^ 2+t+  t").coefficients() == q({0, 2, 1}));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("t - t").is_zero());
    CHECK(parse_poly("-3/6").coefficients() == q({Rational(-1, 2)}));
    CHECK(parse_poly("t/2 + 3") == parse_poly("1/2*t + 3"));
    CHECK(parse_poly("3*t^2/4") == parse_poly("3/4*t^2"));
}

TEST_CASE("parse_poly rejects malformed input with a byte offset") {
    auto offset_of = [](const char* text) -> std::size_t {
        try {
            parse_poly(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        FAIL("no parse error for " << text);
        return 0;
    };
    CHECK(offset_of("4*t^ + 1") == 5);
    CHECK(offset_of("t t") == 2);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("1/0") == 2);
    CHECK_THROWS_AS(parse_poly("t^9999999"), ParseError);
    CHECK_THROWS_AS(parse_poly("x"), ParseError);
    CHECK_THROWS_AS(parse_poly("2*"), ParseError);
}

TEST_CASE("to_string round-trips through the parser") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Poly f = testing::random_poly(rng, 7, 9, trial % 3 == 0);
        CHECK(parse_poly(f.to_string()) == f);
    }
}

TEST_CASE("ring arithmetic and division") {
    Poly f = parse_poly("t^3 + 2*t - 1");
    Poly g = parse_poly("t^2 - 1/3");
    auto [qq, r] = divmod(f, g);
    CHECK(qq * g + r == f);
    CHECK(r.degree().value_or(0) < 2);
    CHECK(div_exact(f * g, g) == f);
    CHECK_THROWS_AS(div_exact(f, g), DomainError);
    CHECK_THROWS_AS(divmod(f, Poly()), DomainError);
    CHECK(pow(t() + Poly::constant(1), 3) == parse_poly("t^3 + 3*t^2 + 3*t + 1"));
    CHECK(f.eval(2) == 11);
    CHECK(f.derivative() == parse_poly("3*t^2 + 2"));
    CHECK(Poly().degree() == std::nullopt);
    CHECK(gcd(parse_poly("t^2 - 1"), parse_poly("2*t - 2")) == parse_poly("t - 1"));
}

TEST_CASE("squarefree_decompose examples") {
    auto sf = squarefree_decompose(parse_poly("t^3 + t^2"));
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].factor == parse_poly("t + 1"));
    CHECK(sf[0].multiplicity == 1);
    CHECK(sf[1].factor == t());
    CHECK(sf[1].multiplicity == 2);

    Poly f = parse_poly("4*t^3 + 27");
    CHECK(gcd(f, f.derivative()).is_constant());
    sf = squarefree_decompose(f);
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == parse_poly("t^3 + 27/4"));
    CHECK(sf[0].multiplicity == 1);

    sf = squarefree_decompose(pow(parse_poly("t^2 + 1"), 2));
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == parse_poly("t^2 + 1"));
    CHECK(sf[0].multiplicity == 2);
}

TEST_CASE("property: squarefree decomposition reconstructs f up to its leading coefficient") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        // Products of small random factors with random multiplicities.
        Poly f = Poly::constant(Rational(static_cast<long>(rng() % 5) + 1));
        int parts = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < parts; ++i) {
            Poly g = testing::random_poly(rng, 1 + rng() % 3, 4, false);
            if (g.is_constant()) continue;
            f = f * pow(g, 1 + static_cast<unsigned>(rng() % 3));
        }
        Poly rebuilt = Poly::constant(f.leading());
        unsigned last = 0;
        for (const auto& [g, e] : squarefree_decompose(f)) {
            CHECK(g.is_monic());
            CHECK(gcd(g, g.derivative()).is_constant());
            CHECK(e > last);
            last = e;
            rebuilt = rebuilt * pow(g, e);
        }
        CHECK(rebuilt == f);
    }
}

TEST_CASE("valuation examples and additivity") {
    CHECK(valuation(parse_poly("t^5 + t^3"), t()) == Valuation(3));
    CHECK(valuation(parse_poly("4*t^3 + 27"), parse_poly("t - 1")) == Valuation(0));
    CHECK(valuation(Poly(), t()).is_infinite());
    CHECK_THROWS_AS(valuation(t(), Poly::constant(1)), DomainError);

    std::mt19937_64 rng(5);
    Poly p = parse_poly("t^2 + 1");
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = testing::random_poly(rng, 4, 6, false);
        Poly g = testing::random_poly(rng, 4, 6, false);
        if (f.is_zero() || g.is_zero()) continue;
        unsigned a = rng() % 3, b = rng() % 3;
        f = f * pow(p, a);
        g = g * pow(p, b);
        CHECK(valuation(f * g, p).value() == valuation(f, p).value() + valuation(g, p).value());
        CHECK(valuation(f, p).value() >= a);
    }
}

TEST_CASE("valuation_layers split a cluster by the valuation of g") {
    Poly pi = parse_poly("t^3 - t");  // roots 0, 1, -1
    Poly g = parse_poly("t^2") * parse_poly("t - 1");
    auto layers = valuation_layers(pi, g);
    Poly product = Poly::constant(1);
    for (const auto& l : layers) {
        product = product * l.factor;
        for (Rational r : {Rational(0), Rational(1), Rational(-1)})
            if (l.factor.eval(r) == 0) CHECK(valuation(g, t() - Poly::constant(r)) == l.v);
    }
    CHECK(product == pi);
    CHECK(layers.size() == 3);
}

TEST_CASE("reverse_pad examples and involution") {
    CHECK(reverse_pad(t(), 4) == Poly::monomial(1, 3));
    CHECK(reverse_pad(Poly::constant(1), 6) == Poly::monomial(1, 6));
    CHECK(reverse_pad(Poly::monomial(1, 4), 4) == Poly::constant(1));
    CHECK_THROWS_AS(reverse_pad(Poly::monomial(1, 5), 4), DomainError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = testing::random_poly(rng, 6, 5, false);
        if (f.is_zero() || f.coefficient(0) == 0) continue;
        std::size_t d = *f.degree() + rng() % 4;
        // Involutive on polynomials not divisible by t when padded to their own degree.
        CHECK(reverse_pad(reverse_pad(f, *f.degree()), *f.degree()) == f);
        CHECK(reverse_pad(f, d).degree() == d);
    }
}

TEST_CASE("naive_height examples") {
    CHECK(naive_height(parse_poly("3*t^2 - 5")) == 5);
    CHECK(naive_height(Poly()) == 0);
    CHECK(naive_height(parse_poly("t/2 + 3")) == 3);
}

TEST_CASE("rational functions") {
    RatFunc r = parse_ratfunc("(t^2 - 1)/(2*t - 2)");
    CHECK(r.num == parse_poly("1/2*t + 1/2"));
    CHECK(r.den == Poly::constant(1));
    CHECK(parse_ratfunc("t^3 + 1").num == parse_poly("t^3 + 1"));
    CHECK(parse_ratfunc("(1)/(t)").den == t());
    CHECK_THROWS_AS(parse_ratfunc("(1)/(0)"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("(1)/"), ParseError);
    CHECK(parse_ratfunc(r.to_string()) == r);
}

TEST_CASE("canonical order is total and size-first") {
    CHECK(canonical_less(t(), parse_poly("t^2")));
    CHECK(canonical_less(parse_poly("t - 1"), parse_poly("t + 1")));
    CHECK_FALSE(canonical_less(t(), t()));
}
