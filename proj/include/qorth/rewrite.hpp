// Reduction engine: normal forms against ordered rewrite rules, critical
// pair confluence checking, and a degree-bounded two-sided ideal membership
// oracle via exact sparse elimination.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qorth/freealg.hpp"

namespace qorth {

// lhs (a word, length >= 1) rewrites to rhs; every rhs word must be
// strictly smaller than lhs in deg-lex order.
struct Rule {
    Word lhs;
    NcPoly rhs;
};

class RewriteSystem {
public:
    RewriteSystem(Alphabet alph, std::vector<Rule> rules);

    const Alphabet& alphabet() const { return alph_; }
    const std::vector<Rule>& rules() const { return rules_; }

    // Iterated replacement of the first (largest term, leftmost position,
    // lowest rule index) match until no lhs occurs as a subword.
    NcPoly normal_form(const NcPoly& p) const;

    bool reduces_to_zero(const NcPoly& p) const { return normal_form(p).is_zero(); }

private:
    // first redex in w: (position, rule index), scanning left to right
    std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const;

    Alphabet alph_;
    std::vector<Rule> rules_;
    std::vector<std::vector<size_t>> by_first_;  // rule indices by first symbol
};

struct CriticalPairFailure {
    size_t rule_a, rule_b;
    Word superword;
    NcPoly difference;  // nonzero normal-form difference of the two resolutions
};

// Checks every overlap and inclusion ambiguity whose superword has length
// at most max_overlap_degree; empty result == locally confluent up to the
// bound (hence confluent, the order being well-founded).
std::vector<CriticalPairFailure> check_confluence(const RewriteSystem& rs,
                                                  int max_overlap_degree = 8);

// Bounded two-sided ideal membership.
struct MembershipProblem {
    std::vector<NcPoly> relations;  // ideal generators
    NcPoly target;
    int degree_bound;  // >= degree of target
};

struct CertificateTerm {
    size_t relation_index;
    Word left, right;
    Scalar coefficient;  // target = sum of coefficient * left*relation*right
};

struct MembershipResult {
    bool member = false;
    bool inconclusive = false;  // false membership may be a bound artifact
    std::vector<CertificateTerm> certificate;
};

// Precomputed degree-bounded span of {m1 * g * m2}; the sparse elimination
// runs once and serves any number of targets.
class IdealSpan {
public:
    IdealSpan(Alphabet alph, std::vector<NcPoly> relations, int degree_bound);
    ~IdealSpan();
    IdealSpan(IdealSpan&&) noexcept;
    IdealSpan& operator=(IdealSpan&&) noexcept;

    int degree_bound() const;
    MembershipResult member(const NcPoly& target) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

MembershipResult ideal_member(const MembershipProblem& problem);

// Derive an order-decreasing rewrite system from a list of homogeneous-lead
// relations: exact row reduction with the largest word of each relation as
// the eliminated leading term. Fails if two relations share a leading word
// after reduction (cannot happen for a linearly independent quadratic set).
RewriteSystem rules_from_relations(const Alphabet& alph, const std::vector<NcPoly>& relations);

}  // namespace qorth
