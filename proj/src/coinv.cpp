#include "qorth/coinv.hpp"

namespace qorth {

bool WeightGrading::is_coinvariant(const NcPoly& p) const {
    for (const auto& [w, c] : p.terms())
        if (weight(w) != 0) return false;
    return true;
}

Tensor2 WeightGrading::coaction(const NcPoly& p) const {
    const Alphabet& z_alph = so_.circle_alphabet();
    Tensor2 t(p.alphabet(), z_alph);
    for (const auto& [w, c] : p.terms()) {
        int wt = weight(w);
        Word zw;
        int gen = wt >= 0 ? 0 : 1;  // z or zinv
        for (int k = 0; k < (wt >= 0 ? wt : -wt); ++k) zw.push_back(static_cast<char>(gen));
        t.add_term(w, zw, c);
    }
    return t;
}

namespace {

std::vector<NcPoly> symmetrizer_relations(const SoAlgebra& so, const Alphabet& x_alph) {
    SpectralProjectors pr = spectral_projectors(braid_matrix(so.R(), 3), 3);
    return relations_from_projector(pr.minus, x_alph);
}

StarMap make_x_star(const Alphabet& x_alph, Regime regime) {
    auto g = [&](int k, Scalar c) {
        Word w;
        w.push_back(static_cast<char>(k - 1));
        return NcPoly(x_alph, w, std::move(c));
    };
    if (regime == Regime::q_real) {
        // x_k* = q^{rho_k} x_{k'}
        return StarMap(x_alph,
                       {g(3, Scalar::q_power_half(1)), g(2, Scalar::one()),
                        g(1, Scalar::q_power_half(-1))},
                       regime);
    }
    return StarMap(x_alph, {g(1, Scalar::one()), g(2, Scalar::one()), g(3, Scalar::one())}, regime);
}

}  // namespace

QuantumVectorSpace::QuantumVectorSpace(const SoAlgebra& so)
    : so_(so),
      alph_(Alphabet::make("qvec3", {"x1", "x2", "x3"})),
      relations_(symmetrizer_relations(so, alph_)),
      sys_(rules_from_relations(alph_, relations_)),
      quadric_(alph_),
      star_real_(make_x_star(alph_, Regime::q_real)),
      star_unimodular_(make_x_star(alph_, Regime::q_unimodular)) {
    quadric_ = x(1) * x(3).scaled(Scalar::q_power_half(-1)) + x(2) * x(2) +
               x(3) * x(1).scaled(Scalar::q_power_half(1));
}

Tensor2 QuantumVectorSpace::coaction(const NcPoly& p) const {
    Tensor2 out(so_.alphabet(), alph_);
    for (const auto& [w, c] : p.terms()) {
        Tensor2 prod = Tensor2::of(so_.unit(c), NcPoly::unit(alph_));
        for (char g : w) {
            int k = static_cast<unsigned char>(g) + 1;  // x_k
            Tensor2 leg(so_.alphabet(), alph_);
            for (int m = 1; m <= 3; ++m) leg = leg + Tensor2::of(so_.u(k, m), x(m));
            prod = prod * leg;
        }
        out = out + prod;
    }
    return out;
}

}  // namespace qorth
