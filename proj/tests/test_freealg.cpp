#include <doctest.h>

#include "qorth/freealg.hpp"
#include "qorth/parser.hpp"
#include "qorth/suites.hpp"

using namespace qorth;

namespace {
Alphabet xyz() { return Alphabet::make("xyz", {"x1", "x2", "x3"}); }
}  // namespace

TEST_CASE("multiplication is concatenation with collected terms") {
    Alphabet a = xyz();
    NcPoly x1 = NcPoly::generator(a, "x1");
    NcPoly x2 = NcPoly::generator(a, "x2");
    NcPoly p = x1 * x2;
    CHECK(p.term_count() == 1);
    CHECK(p.coeff(word_of({0, 1})).is_one());

    NcPoly lhs = (NcPoly::unit(a) + x1) * (NcPoly::unit(a) - x1);
    CHECK(lhs == NcPoly::unit(a) - x1 * x1);

    Scalar lambda = Scalar::q_power(1) - Scalar::q_power(-1);
    NcPoly scaled = x1.scaled(lambda) * x2;
    CHECK(scaled.coeff(word_of({0, 1})) == lambda);
}

TEST_CASE("alphabet mismatch throws") {
    Alphabet a = xyz();
    Alphabet b = Alphabet::make("other", {"g"});
    CHECK_THROWS_AS(NcPoly::generator(a, "x1") * NcPoly::generator(b, "g"),
                    std::invalid_argument);
    CHECK_THROWS_AS(NcPoly::generator(a, "nope"), std::invalid_argument);
}

TEST_CASE("associativity on random polynomials") {
    Alphabet a = xyz();
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        NcPoly p = random_poly(rng, a, 3, 3);
        NcPoly q = random_poly(rng, a, 3, 3);
        NcPoly r = random_poly(rng, a, 3, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(NcPoly::unit(a) * p == p);
        CHECK(p * NcPoly::unit(a) == p);
    }
}

TEST_CASE("star maps reverse words and conjugate coefficients") {
    Alphabet a = xyz();
    // involutive toy star: x1 <-> x3 scaled, x2 fixed
    std::vector<NcPoly> images = {
        NcPoly(a, word_of({2}), Scalar::q_power_half(1)),
        NcPoly::generator(a, "x2"),
        NcPoly(a, word_of({0}), Scalar::q_power_half(-1)),
    };
    StarMap star(a, images, Regime::q_real);
    NcPoly p = NcPoly::generator(a, "x1") * NcPoly::generator(a, "x2");
    NcPoly expect = NcPoly(a, word_of({1, 2}), Scalar::q_power_half(1));
    CHECK(star(p) == expect);
    Rng rng(17);
    for (int k = 0; k < 50; ++k) {
        NcPoly u = random_poly(rng, a, 3, 3);
        NcPoly v = random_poly(rng, a, 3, 2);
        CHECK(star(star(u)) == u);
        CHECK(star(u * v) == star(v) * star(u));
    }
}

TEST_CASE("tensor square collects and multiplies componentwise") {
    Alphabet a = xyz();
    NcPoly x1 = NcPoly::generator(a, "x1"), x2 = NcPoly::generator(a, "x2");
    Tensor2 t = Tensor2::of(x1, x2) + Tensor2::of(x1, x2);
    CHECK(t.terms().size() == 1);
    Tensor2 prod = t * Tensor2::of(x2, x1);
    CHECK(prod.terms().begin()->first.first == word_of({0, 1}));
    CHECK(prod.terms().begin()->first.second == word_of({1, 0}));
    Rng rng(23);
    for (int k = 0; k < 20; ++k) {
        Tensor2 u = Tensor2::of(random_poly(rng, a, 2, 2), random_poly(rng, a, 2, 2));
        Tensor2 v = Tensor2::of(random_poly(rng, a, 2, 2), random_poly(rng, a, 2, 2));
        Tensor2 w = Tensor2::of(random_poly(rng, a, 2, 2), random_poly(rng, a, 2, 2));
        CHECK((u * v) * w == u * (v * w));
    }
}

TEST_CASE("matrices multiply with noncommutative entries") {
    Alphabet a = xyz();
    NcMatrix m(2, 2, a);
    m.at(0, 0) = NcPoly::generator(a, "x1");
    m.at(0, 1) = NcPoly::generator(a, "x2");
    m.at(1, 0) = NcPoly::generator(a, "x2");
    m.at(1, 1) = NcPoly::generator(a, "x3");
    NcMatrix id = NcMatrix::identity(2, a);
    NcMatrix prod = id * m;
    CHECK(prod.at(0, 1) == m.at(0, 1));
    NcMatrix sq = m * m;
    // entry (0,0) = x1 x1 + x2 x2 in that order
    NcPoly want = NcPoly::generator(a, "x1") * NcPoly::generator(a, "x1") +
                  NcPoly::generator(a, "x2") * NcPoly::generator(a, "x2");
    CHECK(sq.at(0, 0) == want);
    CHECK_THROWS_AS(NcMatrix(2, 3, a) * NcMatrix(2, 3, a), std::invalid_argument);
}

TEST_CASE("expression parsing") {
    Alphabet a = xyz();
    NcPoly p = parse_poly("(1/2)*x1^2 - i*x2 x3 + r^-1", a);
    CHECK(p.coeff(word_of({0, 0})) == Scalar::rational(1, 2));
    CHECK(p.coeff(word_of({1, 2})) == -Scalar::i());
    CHECK(p.coeff(Word()) == Scalar::r_power(-1));
    CHECK_THROWS_AS(parse_poly("x1 + ", a), ParseError);
    CHECK_THROWS_AS(parse_poly("y9", a), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 / x2", a), ParseError);
    CHECK_THROWS_AS(parse_poly("x1^-1", a), ParseError);
    // parse errors carry a position
    try {
        parse_poly("x1 + nope", a);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
}

TEST_CASE("polynomial text is parseable and stable") {
    Alphabet a = xyz();
    Rng rng(31);
    for (int k = 0; k < 60; ++k) {
        NcPoly p = random_poly(rng, a, 3, 4);
        NcPoly back = parse_poly(p.to_text(), a);
        CHECK(back == p);
        CHECK(back.to_text() == p.to_text());
    }
}
