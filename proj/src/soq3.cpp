#include "qorth/soq3.hpp"

#include <stdexcept>

namespace qorth {

namespace {

NcPoly gen2(const Alphabet& alph, int g1, int g2, Scalar c) {
    return NcPoly(alph, word_of({g1, g2}), std::move(c));
}

// entrywise expansion of R u1 u2 - u2 u1 R over an N x N generator matrix
std::vector<NcPoly> make_rtt(const Alphabet& alph, const ScalarMatrix& R, int N) {
    auto gid = [N](int i, int j) { return (i - 1) * N + (j - 1); };
    std::vector<NcPoly> rels;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            for (int c = 1; c <= N; ++c)
                for (int d = 1; d <= N; ++d) {
                    NcPoly rel(alph);
                    for (int k = 1; k <= N; ++k)
                        for (int l = 1; l <= N; ++l) {
                            const Scalar& lhs = R.at(gid(a, b) + 0, gid(k, l) + 0);
                            if (!lhs.is_zero())
                                rel += gen2(alph, gid(k, c), gid(l, d), lhs);
                            const Scalar& rhs = R.at(gid(k, l), gid(c, d));
                            if (!rhs.is_zero())
                                rel -= gen2(alph, gid(b, l), gid(a, k), rhs);
                        }
                    rels.push_back(std::move(rel));
                }
    return rels;
}

// the two matrix orthogonality conditions, 2 N^2 entries
std::vector<NcPoly> make_metric(const Alphabet& alph, int N) {
    auto gid = [N](int i, int j) { return (i - 1) * N + (j - 1); };
    auto ip = [N](int i) { return conj_index(i, N); };
    std::vector<NcPoly> rels;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            // (u C u^t C)_{ab} = q^{rho_b} sum_c q^{-rho_c} u^a_c u^{b'}_{c'}
            NcPoly r1(alph);
            for (int c = 1; c <= N; ++c)
                r1 += gen2(alph, gid(a, c), gid(ip(b), ip(c)),
                           Scalar::r_power(rho4(b, N) - rho4(c, N)));
            if (a == b) r1 -= NcPoly::unit(alph);
            rels.push_back(std::move(r1));
            // (C u^t C u)_{ab} = q^{-rho_a} sum_d q^{-rho_d} u^d_{a'} u^{d'}_b
            NcPoly r2(alph);
            for (int d = 1; d <= N; ++d)
                r2 += gen2(alph, gid(d, ip(a)), gid(ip(d), b),
                           Scalar::r_power(-rho4(a, N) - rho4(d, N)));
            if (a == b) r2 -= NcPoly::unit(alph);
            rels.push_back(std::move(r2));
        }
    return rels;
}

Alphabet make_u_alphabet() {
    std::vector<std::string> names;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) names.push_back("u" + std::to_string(i) + std::to_string(j));
    return Alphabet::make("so3", std::move(names));
}

RewriteSystem make_circle_system(const Alphabet& z_alph) {
    std::vector<Rule> rules;
    rules.push_back({word_of({0, 1}), NcPoly::unit(z_alph)});
    rules.push_back({word_of({1, 0}), NcPoly::unit(z_alph)});
    return RewriteSystem(z_alph, std::move(rules));
}

GenMap make_covering(const Alphabet& u_alph, const SlAlgebra& sl) {
    const Scalar s = Scalar::q_power_half(1);
    const Scalar w = Scalar::w();
    NcPoly a = sl.gen("a"), b = sl.gen("b"), c = sl.gen("c"), d = sl.gen("d");
    std::vector<NcPoly> images = {
        a * a,       (b * a).scaled(w), -(b * b),
        (c * a).scaled(w), sl.unit() + (b * c).scaled(s + s.inverse()), -(d * b).scaled(w),
        -(c * c),    -(d * c).scaled(w), d * d,
    };
    return GenMap(u_alph, sl.alphabet(), std::move(images));
}

StarMap make_u_star(const Alphabet& u_alph, Regime regime) {
    std::vector<NcPoly> images;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
            if (regime == Regime::q_unimodular) {
                images.push_back(NcPoly(u_alph, word_of({(j - 1) * 3 + (k - 1)}), Scalar::one()));
            } else {
                // (u^j_k)* = q^{rho_j - rho_k} u^{j'}_{k'}
                int jp = 4 - j, kp = 4 - k;
                images.push_back(NcPoly(u_alph, word_of({(jp - 1) * 3 + (kp - 1)}),
                                        Scalar::r_power(so3_rho4(j) - so3_rho4(k))));
            }
        }
    return StarMap(u_alph, std::move(images), regime);
}

RewriteSystem make_exterior_system(const ScalarMatrix& rhat) {
    Alphabet e_alph = Alphabet::make("ext3", {"e1", "e2", "e3"});
    SpectralProjectors pr = spectral_projectors(rhat, 3);
    std::vector<NcPoly> rels = relations_from_projector(pr.plus, e_alph);
    for (auto& r : relations_from_projector(pr.zero, e_alph)) rels.push_back(std::move(r));
    return rules_from_relations(e_alph, rels);
}

}  // namespace

SoAlgebra::SoAlgebra(const SlAlgebra& sl)
    : sl_(sl),
      alph_(make_u_alphabet()),
      z_alph_(Alphabet::make("circle", {"z", "zinv"})),
      z_sys_(make_circle_system(z_alph_)),
      R_(build_R(3)),
      e_sys_(make_exterior_system(braid_matrix(R_, 3))),
      eps_(extract_epsilon(e_sys_)),
      rtt_(make_rtt(alph_, R_, 3)),
      metric_(make_metric(alph_, 3)),
      det_(alph_),
      phi_(make_covering(alph_, sl)),
      star_real_(make_u_star(alph_, Regime::q_real)),
      star_unimodular_(make_u_star(alph_, Regime::q_unimodular)) {
    // determinant: sum eps_{mnp} u^1_m u^2_n u^3_p
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int p = 1; p <= 3; ++p) {
                const Scalar& c = eps_.at(m, n, p);
                if (c.is_zero()) continue;
                det_.add_term(word_of({gen_id(1, m), gen_id(2, n), gen_id(3, p)}), c);
            }

    // cofactor table (all equivalent quadratic expressions per entry)
    const Scalar q = Scalar::q_power(1);
    const Scalar qi = Scalar::q_power(-1);
    const Scalar lt = Scalar::q_power_half(1) - Scalar::q_power_half(-1);
    auto t = [&](int i1, int j1, int i2, int j2, Scalar c) {
        return gen2(alph_, gen_id(i1, j1), gen_id(i2, j2), std::move(c));
    };
    auto& cof = cof_;
    cof[0][0] = {t(2, 2, 3, 3, 1) - t(2, 3, 3, 2, q), -t(3, 2, 2, 3, qi) + t(3, 3, 2, 2, 1)};
    cof[1][0] = {-t(2, 1, 3, 3, q) + t(2, 3, 3, 1, q) - t(2, 2, 3, 2, q * lt),
                 t(3, 1, 2, 3, 1) - t(3, 3, 2, 1, 1) + t(3, 2, 2, 2, lt)};
    cof[2][0] = {t(2, 1, 3, 2, q) - t(2, 2, 3, 1, q * q), -t(3, 1, 2, 2, 1) + t(3, 2, 2, 1, q)};
    cof[0][1] = {-t(1, 2, 3, 3, qi) + t(1, 3, 3, 2, 1), t(3, 2, 1, 3, qi) - t(3, 3, 1, 2, 1),
                 (-t(2, 2, 2, 3, 1) + t(2, 3, 2, 2, q)).scaled(qi * lt.inverse())};
    cof[1][1] = {t(1, 1, 3, 3, 1) - t(1, 3, 3, 1, 1) + t(1, 2, 3, 2, lt),
                 -t(3, 1, 1, 3, 1) + t(3, 3, 1, 1, 1) - t(3, 2, 1, 2, lt),
                 (t(2, 1, 2, 3, 1) - t(2, 3, 2, 1, 1) + t(2, 2, 2, 2, lt)).scaled(lt.inverse())};
    cof[2][1] = {-t(1, 1, 3, 2, 1) + t(1, 2, 3, 1, q), t(3, 1, 1, 2, 1) - t(3, 2, 1, 1, q),
                 (-t(2, 1, 2, 2, 1) + t(2, 2, 2, 1, q)).scaled(lt.inverse())};
    cof[0][2] = {t(1, 2, 2, 3, qi) - t(1, 3, 2, 2, 1), -t(2, 2, 1, 3, qi * qi) + t(2, 3, 1, 2, qi)};
    cof[1][2] = {-t(1, 1, 2, 3, 1) + t(1, 3, 2, 1, 1) - t(1, 2, 2, 2, lt),
                 t(2, 1, 1, 3, qi) - t(2, 3, 1, 1, qi) + t(2, 2, 1, 2, qi * lt)};
    cof[2][2] = {t(1, 1, 2, 2, 1) - t(1, 2, 2, 1, q), -t(2, 1, 1, 2, qi) + t(2, 2, 1, 1, 1)};
}

NcPoly SoAlgebra::u(int i, int j) const {
    return NcPoly(alph_, word_of({gen_id(i, j)}), Scalar::one());
}

std::vector<NcPoly> SoAlgebra::deduped_relations() const {
    std::vector<NcPoly> out;
    for (const auto& list : {rtt_, metric_})
        for (const auto& r : list) {
            if (r.is_zero()) continue;
            bool dupe = false;
            for (const auto& seen : out)
                if (seen == r) {
                    dupe = true;
                    break;
                }
            if (!dupe) out.push_back(r);
        }
    return out;
}

std::vector<NcPoly> SoAlgebra::metric_invariants() const {
    // for each column/row index j: sum_k q^{rho_j - rho_k} u^k_j u^{k'}_{j'}
    // and sum_k q^{rho_j - rho_k} u^j_k u^{j'}_{k'}
    std::vector<NcPoly> out;
    for (int j = 1; j <= 3; ++j) {
        NcPoly by_col(alph_), by_row(alph_);
        for (int k = 1; k <= 3; ++k) {
            Scalar c = Scalar::r_power(so3_rho4(j) - so3_rho4(k));
            by_col += gen2(alph_, gen_id(k, j), gen_id(4 - k, 4 - j), c);
            by_row += gen2(alph_, gen_id(j, k), gen_id(4 - j, 4 - k), c);
        }
        out.push_back(std::move(by_col));
        out.push_back(std::move(by_row));
    }
    return out;
}

NcMatrix SoAlgebra::antipode_matrix() const {
    NcMatrix m(3, 3, alph_);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            m.at(i - 1, j - 1) = NcPoly(alph_, word_of({gen_id(4 - j, 4 - i)}),
                                        Scalar::r_power(so3_rho4(j) - so3_rho4(i)));
    return m;
}

NcMatrix SoAlgebra::u_matrix() const {
    NcMatrix m(3, 3, alph_);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) m.at(i - 1, j - 1) = u(i, j);
    return m;
}

const std::vector<NcPoly>& SoAlgebra::cofactor_expressions(int m, int a) const {
    return cof_.at(static_cast<size_t>(m - 1)).at(static_cast<size_t>(a - 1));
}

NcMatrix SoAlgebra::cofactor_matrix() const {
    NcMatrix m(3, 3, alph_);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) m.at(i - 1, j - 1) = cofactor_expressions(i, j).front();
    return m;
}

Tensor2 SoAlgebra::coproduct_gen(int i, int j) const {
    Tensor2 t(alph_, alph_);
    for (int m = 1; m <= 3; ++m) t = t + Tensor2::of(u(i, m), u(m, j));
    return t;
}

NcPoly SoAlgebra::so2_quotient(const NcPoly& p) const {
    NcPoly z = NcPoly::generator(z_alph_, "z");
    NcPoly zinv = NcPoly::generator(z_alph_, "zinv");
    NcPoly one = NcPoly::unit(z_alph_);
    NcPoly zero(z_alph_);
    std::vector<NcPoly> images = {z, zero, zero, zero, one, zero, zero, zero, zinv};
    GenMap pi(alph_, z_alph_, std::move(images));
    return z_sys_.normal_form(pi(p));
}

SoAlgebra::TwoByTwo SoAlgebra::two_by_two() const {
    TwoByTwo t{Alphabet::make("so2x2", {"v11", "v12", "v21", "v22"}), {}, {}};
    ScalarMatrix R2 = build_R(2);
    t.rtt = make_rtt(t.alph, R2, 2);
    t.metric = make_metric(t.alph, 2);
    return t;
}

}  // namespace qorth
