// The quantized enveloping algebra dual to the orthogonal quantum group:
// PBW normal form on E, F, K, K^{-1}, Hopf maps, the quadratic Casimir, the
// dual pairing with the defining matrix, the induced left/right actions,
// and the real forms.

#pragma once

#include "qorth/soq3.hpp"

namespace qorth {

enum class UqStar : std::uint8_t {
    compact,     // K* = K, E* = FK, F* = K^{-1}E          (q real)
    noncompact,  // K* = K, E* = -FK, F* = -K^{-1}E        (q real)
    split        // K* = K, E* = -E, F* = -F               (|q| = 1)
};

class UqAlgebra {
public:
    explicit UqAlgebra(const SoAlgebra& so);

    const Alphabet& alphabet() const { return alph_; }
    const RewriteSystem& system() const { return sys_; }
    const SoAlgebra& so() const { return so_; }

    NcPoly gen(const std::string& name) const { return NcPoly::generator(alph_, name); }
    NcPoly unit(Scalar c = Scalar::one()) const { return NcPoly::unit(alph_, std::move(c)); }
    NcPoly reduce(const NcPoly& p) const { return sys_.normal_form(p); }
    bool is_zero(const NcPoly& p) const { return reduce(p).is_zero(); }

    // Hopf structure on generators
    Tensor2 gen_coproduct(int g) const { return coproduct_[static_cast<size_t>(g)]; }
    Scalar gen_counit(int g) const { return counit_[static_cast<size_t>(g)]; }
    NcPoly gen_antipode(int g) const { return antipode_[static_cast<size_t>(g)]; }

    Tensor2 coproduct(const NcPoly& p) const;  // legwise reduced
    Scalar counit(const NcPoly& p) const;
    NcPoly antipode(const NcPoly& p) const;

    // the three displayed forms of the quadratic Casimir
    NcPoly casimir_ef_form() const;
    NcPoly casimir_fe_form() const;
    NcPoly casimir_symmetric_form() const;

    // dual pairing <f, a>, f over this algebra, a over the u alphabet
    Scalar pair(const NcPoly& f, const NcPoly& a) const;
    // generator pairing with the normalization parameter alpha (fixed to 1
    // in the canonical table; other values exercise rescaling covariance)
    Scalar pair_gens(int ugen_row, int ugen_col, const std::string& fgen,
                     const Scalar& alpha) const;

    // right action a <| f and left action f |> a on u polynomials
    NcPoly right_action(const NcPoly& a, const NcPoly& f) const;
    NcPoly left_action(const NcPoly& f, const NcPoly& a) const;

    // EF acting from the left (the Casimir shifted by its scalar part)
    NcPoly casimir_left_action(const NcPoly& a) const {
        return left_action(gen("E"), left_action(gen("F"), a));
    }

    const StarMap& star(UqStar form) const;

private:
    NcPoly word_right_action(const Word& a, char fgen) const;
    NcPoly word_left_action(char fgen, const Word& a) const;

    const SoAlgebra& so_;
    Alphabet alph_;
    RewriteSystem sys_;
    std::vector<Tensor2> coproduct_;
    std::vector<Scalar> counit_;
    std::vector<NcPoly> antipode_;
    StarMap star_compact_, star_noncompact_, star_split_;
};

}  // namespace qorth
