#include "qorth/bundles.hpp"

#include <stdexcept>

namespace qorth {

std::vector<std::vector<int>> multi_indices(int len, bool ascending) {
    std::vector<std::vector<int>> out{{}};
    for (int d = 0; d < len; ++d) {
        std::vector<std::vector<int>> next;
        for (const auto& j : out)
            for (int v = 1; v <= 3; ++v) {
                auto nj = j;
                nj.push_back(v);
                next.push_back(std::move(nj));
            }
        out = std::move(next);
    }
    if (!ascending) std::reverse(out.begin(), out.end());
    return out;
}

BundleGenerators build_generators(const SoAlgebra& so, int n) {
    const Scalar s = Scalar::q_power_half(1);
    const Scalar q = Scalar::q_power(1);
    std::vector<NcPoly> xi, eta;
    if (n >= 0) {
        xi = {so.u(1, 1), so.u(2, 1), so.u(3, 1)};
        eta = {so.u(3, 3), so.u(2, 3).scaled(s.inverse()), so.u(1, 3).scaled(q.inverse())};
    } else {
        // reversed-order alpha/beta sequences, matching the displayed p_{-1}
        xi = {so.u(3, 3), so.u(2, 3), so.u(1, 3)};
        eta = {so.u(1, 1), so.u(2, 1).scaled(s), so.u(3, 1).scaled(q)};
    }
    int len = n >= 0 ? n : -n;
    BundleGenerators g;
    for (const auto& J : multi_indices(len, n >= 0)) {
        // ket_J = xi_{j_len} ... xi_{j_1},  bra_J = eta_{j_1} ... eta_{j_len}
        NcPoly k = so.unit(), b = so.unit();
        for (auto it = J.rbegin(); it != J.rend(); ++it) k = k * xi[static_cast<size_t>(*it - 1)];
        for (int j : J) b = b * eta[static_cast<size_t>(j - 1)];
        g.ket.push_back(std::move(k));
        g.bra.push_back(std::move(b));
    }
    return g;
}

BundleData build_idempotent(const SoAlgebra& so, int n) {
    BundleGenerators g = build_generators(so, n);
    int dim = static_cast<int>(g.ket.size());
    BundleData b;
    b.n = n;
    b.idempotent = NcMatrix(dim, dim, so.alphabet());
    b.sl_entries.reserve(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) b.idempotent.at(i, j) = g.ket[i] * g.bra[j];
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            b.sl_entries.push_back(so.covering_reduce(b.idempotent.at(i, j)));
    return b;
}

bool idempotent_check(const SoAlgebra& so, const BundleData& b) {
    const SlAlgebra& sl = so.sl();
    int dim = b.idempotent.rows();
    auto e = [&](int i, int j) -> const NcPoly& {
        return b.sl_entries[static_cast<size_t>(i) * dim + j];
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            NcPoly acc(sl.alphabet());
            for (int k = 0; k < dim; ++k) acc += sl.reduce(e(i, k) * e(k, j));
            if (!sl.is_zero(acc - e(i, j))) return false;
        }
    return true;
}

bool entries_coinvariant(const SoAlgebra& so, const BundleData& b) {
    WeightGrading grading(so);
    int dim = b.idempotent.rows();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!grading.is_coinvariant(b.idempotent.at(i, j))) return false;
    return true;
}

Scalar trace_coefficient(int n, int J) {
    Scalar c = Scalar::one();
    for (int k = 0; k < J; ++k) c *= Scalar::q_power(2 * n - k) - Scalar::one();
    return c;
}

TracePairings trace_and_pairings(const SoAlgebra& so, const BundleData& b) {
    const SlAlgebra& sl = so.sl();
    TracePairings t;
    t.trace_u = b.idempotent.trace();
    NcPoly tr_sl(sl.alphabet());
    int dim = b.idempotent.rows();
    for (int k = 0; k < dim; ++k) tr_sl += b.sl_entries[static_cast<size_t>(k) * dim + k];
    tr_sl = sl.reduce(tr_sl);
    // trace lies in C[bc]; rewrite (bc)^k coefficients in terms of
    // X = (q+1)^{-1}(y2-1), whose image is (q+1)^{-1}(q^{1/2}+q^{-1/2}) bc
    std::vector<Scalar> bc = sl.bc_coefficients(tr_sl);
    const Scalar x_image = (Scalar::q_power_half(1) + Scalar::q_power_half(-1)) /
                           (Scalar::q_power(1) + Scalar::one());
    t.x_coeffs.resize(bc.size(), Scalar::zero());
    Scalar pw = Scalar::one();  // x_image^k
    for (size_t k = 0; k < bc.size(); ++k) {
        t.x_coeffs[k] = bc[k] / pw;
        pw *= x_image;
    }
    t.rank = sl.counit(tr_sl);
    t.degree = sl.singular_trace(tr_sl);
    return t;
}

bool selfadjoint_under(const SoAlgebra& so, const BundleData& b, Regime regime) {
    const StarMap& star = so.star(regime);
    int dim = b.idempotent.rows();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!so.verify_identity(star(b.idempotent.at(j, i)), b.idempotent.at(i, j)))
                return false;
    return true;
}

}  // namespace qorth
