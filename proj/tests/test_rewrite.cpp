#include <doctest.h>

#include "qorth/rewrite.hpp"
#include "qorth/suites.hpp"

using namespace qorth;

namespace {

// toy system: yx -> q^{-1} xy over {x, y}
RewriteSystem toy() {
    Alphabet a = Alphabet::make("toy", {"x", "y"});
    std::vector<Rule> rules;
    rules.push_back({word_of({1, 0}), NcPoly(a, word_of({0, 1}), Scalar::q_power(-1))});
    return RewriteSystem(a, rules);
}

}  // namespace

TEST_CASE("normal form orders a two-letter commutation system") {
    RewriteSystem rs = toy();
    const Alphabet& a = rs.alphabet();
    NcPoly p(a, word_of({1, 0, 1, 0}), Scalar::one());  // yxyx
    NcPoly nf = rs.normal_form(p);
    CHECK(nf.term_count() == 1);
    CHECK(nf.coeff(word_of({0, 0, 1, 1})) == Scalar::q_power(-3));
    CHECK(rs.normal_form(NcPoly::unit(a)) == NcPoly::unit(a));
    CHECK(rs.normal_form(nf) == nf);
}

TEST_CASE("rule validation") {
    Alphabet a = Alphabet::make("toy", {"x", "y"});
    // increasing rule must be rejected
    std::vector<Rule> bad;
    bad.push_back({word_of({0, 1}), NcPoly(a, word_of({1, 0}), Scalar::one())});
    CHECK_THROWS_AS(RewriteSystem(a, bad), std::invalid_argument);
    std::vector<Rule> dup;
    dup.push_back({word_of({1, 0}), NcPoly(a)});
    dup.push_back({word_of({1, 0}), NcPoly(a, word_of({0, 1}), Scalar::one())});
    CHECK_THROWS_AS(RewriteSystem(a, dup), std::invalid_argument);
}

TEST_CASE("confluence checker sees a genuine failure") {
    // x y -> x and y x -> x is not confluent on y x y
    Alphabet a = Alphabet::make("toy2", {"x", "y"});
    std::vector<Rule> rules;
    rules.push_back({word_of({0, 1}), NcPoly(a, word_of({0}), Scalar::one())});
    rules.push_back({word_of({1, 0}), NcPoly(a, word_of({1}), Scalar::one())});
    RewriteSystem rs(a, rules);
    auto failures = check_confluence(rs);
    CHECK(!failures.empty());
}

TEST_CASE("ideal membership with certificates") {
    RewriteSystem rs = toy();
    const Alphabet& a = rs.alphabet();
    NcPoly relation(a, word_of({1, 0}), Scalar::one());
    relation.add_term(word_of({0, 1}), -Scalar::q_power(-1));  // yx - q^{-1} xy

    // the relation itself is a member with a one-term certificate
    MembershipResult self = ideal_member({{relation}, relation, 2});
    CHECK(self.member);
    CHECK(self.certificate.size() == 1);
    CHECK(self.certificate[0].coefficient.is_one());

    // x*(relation) at degree 3
    NcPoly target = NcPoly::generator(a, "x") * relation;
    MembershipResult shifted = ideal_member({{relation}, target, 3});
    CHECK(shifted.member);

    // reconstruct the target from the certificate
    NcPoly rebuilt(a);
    for (const auto& term : shifted.certificate) {
        NcPoly piece = NcPoly(a, term.left, Scalar::one()) * relation *
                       NcPoly(a, term.right, Scalar::one());
        rebuilt += piece.scaled(term.coefficient);
    }
    CHECK(rebuilt == target);

    // zero target is always a member
    CHECK(ideal_member({{relation}, NcPoly(a), 2}).member);

    // a degree-1 word cannot lie in a homogeneous quadratic ideal
    MembershipResult no = ideal_member({{relation}, NcPoly::generator(a, "x"), 3});
    CHECK_FALSE(no.member);
    CHECK(no.inconclusive);

    // membership is linear over the field
    NcPoly combo = relation.scaled(Scalar::r_power(2)) + target.scaled(Scalar::i());
    CHECK(ideal_member({{relation}, combo, 3}).member);

    CHECK_THROWS_AS(ideal_member({{relation}, target, 1}), std::invalid_argument);
}

TEST_CASE("rules from relations give a reduced deg-lex basis") {
    Alphabet a = Alphabet::make("toy", {"x", "y"});
    // span of {yx - xy, 2yx - 2xy} collapses to one rule yx -> xy
    NcPoly r1(a, word_of({1, 0}), Scalar::one());
    r1.add_term(word_of({0, 1}), -Scalar::one());
    RewriteSystem rs = rules_from_relations(a, {r1, r1.scaled(Scalar(2))});
    CHECK(rs.rules().size() == 1);
    CHECK(rs.rules()[0].lhs == word_of({1, 0}));
    CHECK(rs.rules()[0].rhs == NcPoly(a, word_of({0, 1}), Scalar::one()));
}
