// Verification suites: orchestration of every mechanical check the engine
// can run, machine-readable reports, and deterministic property sampling.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qorth/bundles.hpp"
#include "qorth/coinv.hpp"
#include "qorth/slq2.hpp"
#include "qorth/soq3.hpp"
#include "qorth/uqdual.hpp"

namespace qorth {

struct Options {
    int max_n = 3;         // largest |n| for line-bundle checks
    int max_j = 5;         // largest spin for the Casimir diagonalization
    int degree_bound = 3;  // ideal-membership degree bound
    int jobs = 1;          // concurrent suites
    std::uint64_t seed = 1;
};

struct CheckRow {
    std::string id;
    std::string status;  // "pass" | "fail" | "inconclusive"
    std::string detail;
    std::string residual;  // canonical text, empty on pass
    double ms = 0.0;       // human output only, never serialized to JSON
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckRow> rows;

    int count(const std::string& status) const;
    bool ok() const { return count("fail") == 0 && count("inconclusive") == 0; }
};

// deterministic generator for property sampling (splitmix64)
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    int uniform(int n);  // 0 .. n-1
};

Scalar random_scalar(Rng& rng);
NcPoly random_poly(Rng& rng, const Alphabet& alph, int max_degree, int terms);

// randomized property checks shared by suites, unit tests and acceptance
bool scalar_field_axioms(Rng& rng, int cases, std::string* diag = nullptr);
bool scalar_conjugation_properties(Rng& rng, int cases, std::string* diag = nullptr);
bool scalar_text_roundtrip(Rng& rng, int cases, std::string* diag = nullptr);

class Engine {
public:
    explicit Engine(Options opt = Options());
    ~Engine();

    const Options& options() const { return opt_; }

    static const std::vector<std::string>& suite_names();
    static bool has_suite(const std::string& name);

    SuiteResult run_suite(const std::string& name) const;
    std::vector<SuiteResult> run(const std::vector<std::string>& names) const;
    std::vector<SuiteResult> run_all() const { return run(suite_names()); }

    static std::string report_json(const std::vector<SuiteResult>& results);
    static std::string report_human(const std::vector<SuiteResult>& results);
    static int exit_code(const std::vector<SuiteResult>& results);

    // canonical normal form of a parsed expression; algebra is one of
    // sl2, c3, ext, uq, so2
    std::string reduce_expression(const std::string& algebra, const std::string& text) const;
    std::string rmatrix_json(int n) const;

    const SlAlgebra& sl() const { return *sl_; }
    const SoAlgebra& so() const { return *so_; }
    const QuantumVectorSpace& qvs() const { return *qvs_; }
    const UqAlgebra& uq() const { return *uq_; }

private:
    struct SuiteImpl;

    Options opt_;
    std::unique_ptr<SlAlgebra> sl_;
    std::unique_ptr<SoAlgebra> so_;
    std::unique_ptr<QuantumVectorSpace> qvs_;
    std::unique_ptr<UqAlgebra> uq_;
};

}  // namespace qorth
