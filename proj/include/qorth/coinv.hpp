// The circle-coinvariant subalgebra B: weight grading, the right coaction,
// the y-generator calculus, and the quantum vector space with its central
// quadric and cartesian identities.

#pragma once

#include "qorth/soq3.hpp"

namespace qorth {

// column weights of the defining matrix: +1, 0, -1
class WeightGrading {
public:
    explicit WeightGrading(const SoAlgebra& so) : so_(so) {}

    int weight_of_gen(int gen_id) const {
        int col = gen_id % 3;
        return col == 0 ? 1 : (col == 1 ? 0 : -1);
    }
    int weight(const Word& w) const {
        int total = 0;
        for (char g : w) total += weight_of_gen(static_cast<unsigned char>(g));
        return total;
    }
    // every word of p has weight zero
    bool is_coinvariant(const NcPoly& p) const;

    // delta(p): each word maps to word (x) z^{weight}
    Tensor2 coaction(const NcPoly& p) const;

private:
    const SoAlgebra& so_;
};

// quantum vector space on x1, x2, x3 cut out by the q-symmetrizer
class QuantumVectorSpace {
public:
    explicit QuantumVectorSpace(const SoAlgebra& so);

    const Alphabet& alphabet() const { return alph_; }
    const RewriteSystem& system() const { return sys_; }
    const std::vector<NcPoly>& relations() const { return relations_; }

    NcPoly x(int k) const { return NcPoly::generator(alph_, "x" + std::to_string(k)); }
    NcPoly reduce(const NcPoly& p) const { return sys_.normal_form(p); }

    // central quadric q^{-1/2} x1 x3 + x2^2 + q^{1/2} x3 x1
    const NcPoly& central_quadric() const { return quadric_; }

    // left coaction x_k -> sum_m u^k_m (x) x_m, extended multiplicatively
    Tensor2 coaction(const NcPoly& p) const;

    const StarMap& star(Regime regime) const {
        return regime == Regime::q_real ? star_real_ : star_unimodular_;
    }

private:
    const SoAlgebra& so_;
    Alphabet alph_;
    std::vector<NcPoly> relations_;
    RewriteSystem sys_;
    NcPoly quadric_;
    StarMap star_real_, star_unimodular_;
};

}  // namespace qorth
