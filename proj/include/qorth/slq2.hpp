// The workhorse quotient model O(SL_s(2)), s = q^{1/2} = r^2: confluent PBW
// normal form, Hopf structure maps, the counit and the singular trace. All
// identities of the orthogonal quantum group are decided inside this model
// through the covering map (see soq3).
//
// Normal forms use the deg-lex Groebner system that eliminates the products
// {ba, ca, cb, db, dc, da, bc}; its PBW words are a^i b^j d^l and
// a^i c^k d^l. A second, display-oriented basis {a^i b^j c^k, b^j c^k d^l}
// (words never mixing a and d) is obtained from it by an exact triangular
// substitution and is what printing, the counit and the singular trace use.

#pragma once

#include <optional>

#include "qorth/freealg.hpp"
#include "qorth/rewrite.hpp"

namespace qorth {

struct SlHopf {
    std::vector<Tensor2> coproduct;  // generator index -> Delta(gen)
    std::vector<Scalar> counit;      // generator index -> eps(gen)
    std::vector<NcPoly> antipode;    // generator index -> S(gen)
};

class SlAlgebra {
public:
    SlAlgebra();

    const Alphabet& alphabet() const { return alph_; }
    const RewriteSystem& system() const { return sys_; }

    NcPoly gen(const std::string& name) const { return NcPoly::generator(alph_, name); }
    NcPoly unit(Scalar c = Scalar::one()) const { return NcPoly::unit(alph_, std::move(c)); }

    // normal form in the confluent basis
    NcPoly reduce(const NcPoly& p) const { return sys_.normal_form(p); }

    // exact change of basis into words that never mix a and d
    NcPoly display_form(const NcPoly& reduced) const;

    // full canonical pipeline: reduce then display
    NcPoly canonical(const NcPoly& p) const { return display_form(reduce(p)); }

    bool is_zero(const NcPoly& p) const { return reduce(p).is_zero(); }
    bool equal(const NcPoly& x, const NcPoly& y) const { return is_zero(x - y); }

    // counit: a, d -> 1 and b, c -> 0 (valid on any representative)
    Scalar counit(const NcPoly& p) const;

    // singular trace: vanishes on scalars, (bc)^k -> (-1)^k q^{k/2}/(q^k - 1).
    // The argument, brought to display form, must lie in C + C[bc]; anything
    // else signals a non-coinvariant argument and throws std::domain_error.
    Scalar singular_trace(const NcPoly& p) const;

    // coefficients t_k of p = sum_k t_k (bc)^k for p in C[bc] (display form)
    std::vector<Scalar> bc_coefficients(const NcPoly& p) const;

    const SlHopf& hopf() const { return hopf_; }
    Tensor2 coproduct(const NcPoly& p) const;  // legwise reduced
    NcPoly antipode(const NcPoly& p) const;    // anti-homomorphic extension, reduced

    const StarMap& star(Regime regime) const {
        return regime == Regime::q_real ? star_real_ : star_unimodular_;
    }

private:
    Alphabet alph_;
    RewriteSystem sys_;
    SlHopf hopf_;
    StarMap star_real_, star_unimodular_;
};

}  // namespace qorth
