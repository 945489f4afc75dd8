// Line bundles over the coinvariant subalgebra: generator vectors indexed
// by multi-indices, the explicit idempotents p_n, trace expansion in
// X = (q+1)^{-1}(y2 - 1), and the two zero-cocycle pairings (rank via the
// counit, degree via the singular trace).

#pragma once

#include "qorth/coinv.hpp"

namespace qorth {

// all multi-indices {1,2,3}^len; ascending lexicographic for n >= 0 and
// descending for n < 0, matching the displayed idempotent conventions
std::vector<std::vector<int>> multi_indices(int len, bool ascending);

struct BundleGenerators {
    std::vector<NcPoly> ket;  // 3^{|n|} entries, degree |n| words
    std::vector<NcPoly> bra;
};

BundleGenerators build_generators(const SoAlgebra& so, int n);

struct BundleData {
    int n = 0;
    NcMatrix idempotent;              // entries ket_K * bra_J over the u alphabet
    std::vector<NcPoly> sl_entries;   // covering-reduced entries, row-major
};

// |n| <= bound (the CLI --max-n); checks nothing itself, see the functions
// below for idempotency / weight / trace assertions
BundleData build_idempotent(const SoAlgebra& so, int n);

bool idempotent_check(const SoAlgebra& so, const BundleData& b);     // p^2 = p entrywise
bool entries_coinvariant(const SoAlgebra& so, const BundleData& b);  // weight 0

struct TracePairings {
    NcPoly trace_u;                  // sum of diagonal entries over the u alphabet
    std::vector<Scalar> x_coeffs;    // trace = sum_J x_coeffs[J] X^J
    Scalar rank;                     // counit pairing
    Scalar degree;                   // singular-trace pairing
};

TracePairings trace_and_pairings(const SoAlgebra& so, const BundleData& b);

// closed-form coefficient C_J^{(n)} = prod_{k=0}^{J-1} (q^{2n-k} - 1)
Scalar trace_coefficient(int n, int J);

// q-real star-transpose fixes p_n; the unimodular one must not (n != 0)
bool selfadjoint_under(const SoAlgebra& so, const BundleData& b, Regime regime);

}  // namespace qorth
