// Presentation layer for the orthogonal quantum group at N = 3: relation
// generation (quadratic exchange relations and the metric condition), the
// quantum determinant and cofactor calculus, the antipode matrix, star
// structures, the diagonal-subgroup quotient, and the two-to-one covering
// homomorphism into SL_s(2) that decides identities in the quotient.

#pragma once

#include <array>

#include "qorth/rmatrix.hpp"
#include "qorth/slq2.hpp"

namespace qorth {

class SoAlgebra {
public:
    explicit SoAlgebra(const SlAlgebra& sl);

    const Alphabet& alphabet() const { return alph_; }
    const SlAlgebra& sl() const { return sl_; }

    // generator u^i_j, 1-based indices
    NcPoly u(int i, int j) const;
    int gen_id(int i, int j) const { return (i - 1) * 3 + (j - 1); }

    NcPoly unit(Scalar c = Scalar::one()) const { return NcPoly::unit(alph_, std::move(c)); }

    // all N^2 x N^2 entrywise exchange relations (zero entries included so
    // callers can iterate residues exhaustively; deduped() drops them)
    std::vector<NcPoly> rtt_relations() const { return rtt_; }
    std::vector<NcPoly> metric_relations() const { return metric_; }  // 18 entries
    std::vector<NcPoly> deduped_relations() const;                    // RTT + metric, cleaned

    const ScalarMatrix& R() const { return R_; }
    const EpsilonTensor& epsilon() const { return eps_; }
    const RewriteSystem& exterior_system() const { return e_sys_; }

    // 7-term cubic quantum determinant
    const NcPoly& quantum_determinant() const { return det_; }

    // the six quadratic central expressions that the metric condition pins to 1
    std::vector<NcPoly> metric_invariants() const;

    // antipode matrix S(u)_{ij} = q^{rho_j - rho_i} u^{j'}_{i'}
    NcMatrix antipode_matrix() const;
    // defining matrix
    NcMatrix u_matrix() const;

    // cofactor table: for each (m, a) the list of equivalent expressions
    const std::vector<NcPoly>& cofactor_expressions(int m, int a) const;
    // canonical cofactor matrix (first expression per entry), hat-u[m][a]
    NcMatrix cofactor_matrix() const;

    // covering homomorphism into SL_s(2)
    const GenMap& covering() const { return phi_; }
    NcPoly covering_reduce(const NcPoly& p) const { return sl_.reduce(phi_(p)); }
    NcPoly covering_canonical(const NcPoly& p) const { return sl_.canonical(phi_(p)); }

    // decision procedure for identities in the determinant-one quotient
    bool verify_zero(const NcPoly& p) const { return covering_reduce(p).is_zero(); }
    bool verify_identity(const NcPoly& lhs, const NcPoly& rhs) const {
        return verify_zero(lhs - rhs);
    }

    // coproduct and counit of the defining matrix
    Tensor2 coproduct_gen(int i, int j) const;  // sum_m u^i_m (x) u^m_j
    Scalar counit_gen(int i, int j) const { return i == j ? Scalar::one() : Scalar::zero(); }

    // diagonal quantum-subgroup quotient onto Laurent polynomials in z
    const Alphabet& circle_alphabet() const { return z_alph_; }
    NcPoly so2_quotient(const NcPoly& p) const;  // z zinv pairs cancelled
    const RewriteSystem& circle_system() const { return z_sys_; }

    // star structures
    const StarMap& star(Regime regime) const {
        return regime == Regime::q_real ? star_real_ : star_unimodular_;
    }

    // N = 2 data for the degenerate orthogonal case
    struct TwoByTwo {
        Alphabet alph;                   // v11, v12, v21, v22
        std::vector<NcPoly> rtt;         // 16 entrywise relations
        std::vector<NcPoly> metric;      // 8 entries
    };
    TwoByTwo two_by_two() const;

private:
    const SlAlgebra& sl_;
    Alphabet alph_;
    Alphabet z_alph_;
    RewriteSystem z_sys_;
    ScalarMatrix R_;
    RewriteSystem e_sys_;
    EpsilonTensor eps_;
    std::vector<NcPoly> rtt_, metric_;
    NcPoly det_;
    GenMap phi_;
    StarMap star_real_, star_unimodular_;
    std::array<std::array<std::vector<NcPoly>, 3>, 3> cof_;  // [m-1][a-1]
};

// 4 rho_i for N = 3: (2, 0, -2)
inline int so3_rho4(int i) { return rho4(i, 3); }

}  // namespace qorth
