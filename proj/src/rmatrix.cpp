#include "qorth/rmatrix.hpp"

#include <stdexcept>

namespace qorth {

// ----------------------------------------------------------- ScalarMatrix

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Scalar::one();
    return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ScalarMatrix: dimension mismatch");
    ScalarMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ScalarMatrix: dimension mismatch");
    ScalarMatrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ScalarMatrix: dimension mismatch");
    ScalarMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Scalar& c = at(i, k);
            if (c.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const Scalar& v = o.at(k, j);
                if (!v.is_zero()) r.at(i, j) += c * v;
            }
        }
    return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& c) const {
    ScalarMatrix r = *this;
    for (auto& v : r.e_) v *= c;
    return r;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

int ScalarMatrix::rank() const {
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < n_; ++i) {
        std::vector<Scalar> row(e_.begin() + idx(i, 0), e_.begin() + idx(i, 0) + n_);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n_ && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][col].inverse();
        for (int c = col; c < n_; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Scalar f = rows[r][col];
            for (int c = col; c < n_; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------- build_R

int conj_index(int i, int N) { return N + 1 - i; }

int rho4(int i, int N) {
    int ip = conj_index(i, N);
    if (i == ip) return 0;
    if (i < ip) return 2 * N - 4 * i;  // 4 * (N/2 - i)
    return -(2 * N - 4 * ip);
}

ScalarMatrix build_R(int N) {
    if (N < 2) throw std::invalid_argument("build_R: need N >= 2");
    const Scalar lambda = Scalar::q_power(1) - Scalar::q_power(-1);
    ScalarMatrix R(N * N);
    auto flat = [N](int block, int inner) { return (block - 1) * N + (inner - 1); };
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int m = 1; m <= N; ++m)
                for (int n = 1; n <= N; ++n) {
                    Scalar v = Scalar::zero();
                    if (i == m && j == n) {
                        int e = (i == j ? 4 : 0) - (i == conj_index(j, N) ? 4 : 0);
                        v += Scalar::r_power(e);
                    }
                    if (i > m) {
                        if (j == m && i == n) v += lambda;
                        if (i == conj_index(j, N) && n == conj_index(m, N))
                            v -= lambda * Scalar::r_power(-(rho4(j, N) + rho4(m, N)));
                    }
                    if (!v.is_zero()) R.at(flat(i, j), flat(m, n)) = v;
                }
    return R;
}

ScalarMatrix braid_matrix(const ScalarMatrix& R, int N) {
    ScalarMatrix B(N * N);
    for (int k = 1; k <= N; ++k)
        for (int j = 1; j <= N; ++j)
            for (int m = 1; m <= N; ++m)
                for (int n = 1; n <= N; ++n)
                    B.at((k - 1) * N + (j - 1), (m - 1) * N + (n - 1)) =
                        R.at((j - 1) * N + (k - 1), (m - 1) * N + (n - 1));
    return B;
}

bool yang_baxter_holds(const ScalarMatrix& R, int N) {
    int dim = N * N * N;
    auto idx = [N](int a, int b, int c) { return ((a - 1) * N + (b - 1)) * N + (c - 1); };
    auto lift = [&](int leg1, int leg2) {
        ScalarMatrix T(dim);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b)
                for (int c = 1; c <= N; ++c) {
                    int src[3] = {a, b, c};
                    for (int x = 1; x <= N; ++x)
                        for (int y = 1; y <= N; ++y) {
                            int dst[3] = {a, b, c};
                            dst[leg1] = x;
                            dst[leg2] = y;
                            const Scalar& v = R.at((x - 1) * N + (y - 1),
                                                   (src[leg1] - 1) * N + (src[leg2] - 1));
                            if (!v.is_zero())
                                T.at(idx(dst[0], dst[1], dst[2]), idx(a, b, c)) += v;
                        }
                }
        return T;
    };
    ScalarMatrix R12 = lift(0, 1), R13 = lift(0, 2), R23 = lift(1, 2);
    return (R12 * R13 * R23 - R23 * R13 * R12).is_zero();
}

// ------------------------------------------------------------- projectors

SpectralProjectors spectral_projectors(const ScalarMatrix& rhat, int N) {
    if (N <= 2) throw std::invalid_argument("spectral_projectors: need N > 2");
    const Scalar ev_plus = Scalar::q_power(1);
    const Scalar ev_minus = -Scalar::q_power(-1);
    const Scalar ev_zero = Scalar::r_power(4 * (1 - N));
    const Scalar evs[3] = {ev_plus, ev_minus, ev_zero};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if ((evs[a] - evs[b]).is_zero())
                throw std::domain_error("spectral_projectors: degenerate eigenvalues");
    auto lagrange = [&](int which) {
        ScalarMatrix P = ScalarMatrix::identity(rhat.dim());
        for (int b = 0; b < 3; ++b) {
            if (b == which) continue;
            ScalarMatrix term = rhat - ScalarMatrix::identity(rhat.dim()).scaled(evs[b]);
            P = P * term.scaled((evs[which] - evs[b]).inverse());
        }
        return P;
    };
    return SpectralProjectors{lagrange(0), lagrange(1), lagrange(2)};
}

std::vector<NcPoly> canonical_relation_basis(const Alphabet& alph,
                                             const std::vector<NcPoly>& relations) {
    RewriteSystem rs = rules_from_relations(alph, relations);
    std::vector<NcPoly> basis;
    for (const auto& rule : rs.rules())
        basis.push_back(NcPoly(alph, rule.lhs, Scalar::one()) - rule.rhs);
    return basis;
}

std::vector<NcPoly> relations_from_projector(const ScalarMatrix& P, const Alphabet& gens) {
    const int N = gens.size();
    if (P.dim() != N * N)
        throw std::invalid_argument("relations_from_projector: dimension mismatch");
    std::vector<NcPoly> rels;
    for (int j = 1; j <= N; ++j)
        for (int l = 1; l <= N; ++l) {
            NcPoly rel(gens);
            for (int m = 1; m <= N; ++m)
                for (int n = 1; n <= N; ++n) {
                    const Scalar& c = P.at((j - 1) * N + (l - 1), (m - 1) * N + (n - 1));
                    if (c.is_zero()) continue;
                    Word w;
                    w.push_back(static_cast<char>(m - 1));
                    w.push_back(static_cast<char>(n - 1));
                    rel.add_term(w, c);
                }
            if (!rel.is_zero()) rels.push_back(std::move(rel));
        }
    return canonical_relation_basis(gens, rels);
}

bool same_span(const Alphabet& alph, const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
    auto ca = canonical_relation_basis(alph, a);
    auto cb = canonical_relation_basis(alph, b);
    if (ca.size() != cb.size()) return false;
    for (size_t k = 0; k < ca.size(); ++k)
        if (ca[k] != cb[k]) return false;
    return true;
}

// ---------------------------------------------------------------- epsilon

std::map<std::array<int, 3>, Scalar> EpsilonTensor::nonzero() const {
    std::map<std::array<int, 3>, Scalar> out;
    for (const auto& [k, v] : all)
        if (!v.is_zero()) out.emplace(k, v);
    return out;
}

EpsilonTensor extract_epsilon(const RewriteSystem& exterior_system) {
    const Alphabet& alph = exterior_system.alphabet();
    if (alph.size() != 3) throw std::invalid_argument("extract_epsilon: need three generators");
    Word top = word_of({0, 1, 2});
    EpsilonTensor eps;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                Word w = word_of({i - 1, j - 1, k - 1});
                NcPoly nf = exterior_system.normal_form(NcPoly(alph, w, Scalar::one()));
                Scalar c = nf.coeff(top);
                if (nf != NcPoly(alph, top, c))
                    throw std::domain_error(
                        "extract_epsilon: degree-3 word not proportional to the top form");
                eps.all[{i, j, k}] = c;
            }
    return eps;
}

PreregularReport preregular_checks(const EpsilonTensor& eps, const Alphabet& x_alph,
                                   const std::vector<NcPoly>& quantum_space_relations) {
    PreregularReport rep;
    const Scalar mu[4] = {Scalar::zero(), Scalar::q_power(1), Scalar::one(), Scalar::q_power(-1)};
    rep.cyclic = true;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                if (eps.at(i, j, k) != mu[k] * eps.at(k, i, j)) rep.cyclic = false;

    ScalarMatrix M(9);  // rows i padded; use a 9x9 with only 3 used rows for rank
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) M.at(i - 1, (j - 1) * 3 + (k - 1)) = eps.at(i, j, k);
    rep.nondegenerate = (M.rank() == 3);

    std::vector<NcPoly> eps_rels;
    for (int i = 1; i <= 3; ++i) {
        NcPoly rel(x_alph);
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                const Scalar& c = eps.at(i, j, k);
                if (!c.is_zero()) rel.add_term(word_of({j - 1, k - 1}), c);
            }
        if (!rel.is_zero()) eps_rels.push_back(std::move(rel));
    }
    rep.span_matches = same_span(x_alph, eps_rels, quantum_space_relations);
    return rep;
}

}  // namespace qorth
