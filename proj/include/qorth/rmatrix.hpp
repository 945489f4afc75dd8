// Construction of the orthogonal-type R-matrix for any N, the projector
// decomposition of the braid matrix, the induced quadratic relation sets,
// the epsilon tensor of the exterior algebra, and pre-regularity checks.

#pragma once

#include <array>
#include <map>
#include <vector>

#include "qorth/freealg.hpp"
#include "qorth/rewrite.hpp"

namespace qorth {

// Dense square matrix of exact Scalars, dimension N^2 in the R-matrix use.
class ScalarMatrix {
public:
    ScalarMatrix() : n_(0) {}
    explicit ScalarMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

    int dim() const { return n_; }
    const Scalar& at(int r, int c) const { return e_[idx(r, c)]; }
    Scalar& at(int r, int c) { return e_[idx(r, c)]; }

    static ScalarMatrix identity(int n);

    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix scaled(const Scalar& c) const;

    bool is_zero() const;
    bool operator==(const ScalarMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    int rank() const;  // exact Gaussian elimination

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * n_ + c; }
    int n_;
    std::vector<Scalar> e_;
};

// rho exponents as multiples of 1/4 (so q^{rho_i} = r^{rho4(i)}).
int rho4(int i, int N);
int conj_index(int i, int N);  // i' = N + 1 - i

// R^{ij}_{mn} with the block convention: row (i-1)N + j, column (m-1)N + n.
ScalarMatrix build_R(int N);

// braid matrix Rhat^{kj}_{mn} = R^{jk}_{mn}
ScalarMatrix braid_matrix(const ScalarMatrix& R, int N);

// exact Yang-Baxter check R12 R13 R23 == R23 R13 R12 on (C^N)^{x3}
bool yang_baxter_holds(const ScalarMatrix& R, int N);

struct SpectralProjectors {
    ScalarMatrix plus, minus, zero;  // eigenvalues q, -q^{-1}, q^{1-N}
};

// Lagrange interpolation at the three eigenvalues; N > 2, q generic.
SpectralProjectors spectral_projectors(const ScalarMatrix& rhat, int N);

// Quadratic relations { sum_{m,n} P^{jl}_{mn} g_m g_n }, zero rows dropped,
// row-reduced to a canonical basis (monic deg-lex leading words).
std::vector<NcPoly> relations_from_projector(const ScalarMatrix& P, const Alphabet& gens);

// canonical row-reduced basis of a span of polynomials (shared helper)
std::vector<NcPoly> canonical_relation_basis(const Alphabet& alph,
                                             const std::vector<NcPoly>& relations);

bool same_span(const Alphabet& alph, const std::vector<NcPoly>& a, const std::vector<NcPoly>& b);

// epsilon_{ijk}: coefficients of degree-three reductions in the exterior
// algebra; exactly seven nonzero components for N = 3.
struct EpsilonTensor {
    std::map<std::array<int, 3>, Scalar> all;  // indices 1..3, zero entries included

    const Scalar& at(int i, int j, int k) const { return all.at({i, j, k}); }
    std::map<std::array<int, 3>, Scalar> nonzero() const;
};

// Reduces every degree-3 word e_k e_m e_n to a multiple of e1 e2 e3 in the
// exterior system; throws if some word fails to be proportional.
EpsilonTensor extract_epsilon(const RewriteSystem& exterior_system);

struct PreregularReport {
    bool cyclic = false;         // eps_{ijk} = mu_k eps_{kij}, mu = (q, 1, q^{-1})
    bool nondegenerate = false;  // the 3x9 matrix (eps_{i,(jk)}) has rank 3
    bool span_matches = false;   // {sum eps_{ijk} x_j x_k} spans the quantum-space relations
};

// Runs the three checks above against a quantum-space relation basis.
PreregularReport preregular_checks(const EpsilonTensor& eps, const Alphabet& x_alph,
                                   const std::vector<NcPoly>& quantum_space_relations);

}  // namespace qorth
