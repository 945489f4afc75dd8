#include <doctest.h>

#include "qorth/parser.hpp"
#include "qorth/scalar.hpp"
#include "qorth/suites.hpp"

using namespace qorth;

TEST_CASE("q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1).is_one());
    // [2] = r^2 + r^{-2}
    CHECK(qint(2) == Scalar::r_power(2) + Scalar::r_power(-2));
    CHECK(qint(-3) == -qint(3));
    for (int n = 2; n <= 8; ++n) CHECK(qint(n) == qint(2) * qint(n - 1) - qint(n - 2));
    // eta^2 = [2]
    CHECK(Scalar::eta() * Scalar::eta() == qint(2));
}

TEST_CASE("defining relation of w") {
    Scalar w = Scalar::w();
    CHECK(w * w == Scalar::one() + Scalar::r_power(4));
    CHECK((w * w.inverse()).is_one());
}

TEST_CASE("field arithmetic on random elements") {
    Rng rng(42);
    std::string diag;
    CHECK_MESSAGE(scalar_field_axioms(rng, 300, &diag), diag);
}

TEST_CASE("conjugations") {
    CHECK(conjugate(Scalar::i(), Regime::q_real) == -Scalar::i());
    CHECK(conjugate(Scalar::i(), Regime::q_unimodular) == -Scalar::i());
    // unimodular regime sends r to 1/r and w to w r^{-2}
    CHECK(conjugate(Scalar::r_power(3), Regime::q_unimodular) == Scalar::r_power(-3));
    CHECK(conjugate(Scalar::w(), Regime::q_unimodular) == Scalar::w() * Scalar::r_power(-2));
    CHECK(conjugate(conjugate(Scalar::w(), Regime::q_unimodular), Regime::q_unimodular) ==
          Scalar::w());
    for (int n = 0; n <= 8; ++n)
        CHECK(conjugate(qint(n), Regime::q_unimodular) == qint(n));
    Rng rng(7);
    std::string diag;
    CHECK_MESSAGE(scalar_conjugation_properties(rng, 100, &diag), diag);
}

TEST_CASE("canonical text round trip") {
    Scalar x = Scalar::rational(1, 2) * Scalar::r_power(-2) + Scalar::i() * Scalar::w();
    CHECK(x.to_text() == "1/2*r^-2 + i*w");
    CHECK(parse_scalar(x.to_text()) == x);
    CHECK(parse_scalar("(1/2)*r^-2 + i*w") == x);
    CHECK(Scalar::zero().to_text() == "0");
    CHECK(parse_scalar("(r^2 - r^-2)^2") ==
          (Scalar::r_power(2) - Scalar::r_power(-2)) * (Scalar::r_power(2) - Scalar::r_power(-2)));
    Rng rng(11);
    std::string diag;
    CHECK_MESSAGE(scalar_text_roundtrip(rng, 200, &diag), diag);
}

TEST_CASE("inverse of a mixed element") {
    Scalar x = Scalar::rational(2, 3) + Scalar::w() * Scalar::r_power(-1);
    CHECK((x * x.inverse()).is_one());
    CHECK_THROWS_AS(Scalar::zero().inverse(), std::domain_error);
}

TEST_CASE("evaluation at r = 1") {
    Scalar a = (Scalar::one() - Scalar::q_power(1)) / (Scalar::one() + Scalar::q_power(2));
    auto v = a.eval_one();
    REQUIRE(v.has_value());
    CHECK(v->is_zero());
    CHECK_FALSE(Scalar::w().eval_one().has_value());  // w-part has no rational value
    // denominator vanishing at 1 is rejected
    Scalar b = Scalar::one() / (Scalar::one() - Scalar::q_power(1));
    CHECK_FALSE(b.eval_one().has_value());
}
