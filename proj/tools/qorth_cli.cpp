// qorth: verification front end. Subcommands:
//   verify  run check suites          (qorth verify --all --json out.json)
//   reduce  normal form of an expression in a named algebra
//   rmatrix dump the R-matrix, projectors and relation sets
// Exit codes: 0 success, 1 at least one check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qorth.h"

namespace {

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { qorth_string_free(value); }
};

int run_verify(qorth_engine* engine, const std::vector<std::string>& suites, bool all,
               const std::string& json_path) {
    if (!all && suites.empty()) {
        std::cerr << "verify: pass --suite NAME or --all\n";
        return 2;
    }
    if (all) {
        qorth_status st = qorth_run_all(engine);
        if (st == QORTH_E_INVALID || st == QORTH_E_INTERNAL) {
            std::cerr << "verify: " << qorth_last_error() << "\n";
            return 2;
        }
    } else {
        for (const auto& name : suites) {
            qorth_status st = qorth_run_suite(engine, name.c_str());
            if (st == QORTH_E_INVALID) {
                std::cerr << "verify: " << qorth_last_error() << "\n";
                return 2;
            }
            if (st == QORTH_E_INTERNAL) {
                std::cerr << "verify: " << qorth_last_error() << "\n";
                return 1;
            }
        }
    }
    StringGuard human;
    if (qorth_report_human(engine, &human.value) == QORTH_OK) std::cout << human.value;
    if (!json_path.empty()) {
        StringGuard json;
        if (qorth_report_json(engine, &json.value) != QORTH_OK) {
            std::cerr << "verify: " << qorth_last_error() << "\n";
            return 1;
        }
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "verify: cannot write " << json_path << "\n";
            return 1;
        }
        out << json.value;
    }
    return qorth_report_exit_code(engine);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for the quantum orthogonal group"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suite_names;
    bool all = false;
    std::string json_path;
    long long max_n = 3, max_j = 5, degree_bound = 3, jobs = 1, seed = 1;
    verify->add_option("--suite", suite_names, "suite name (repeatable)");
    verify->add_flag("--all", all, "run every suite");
    verify->add_option("--max-n", max_n, "largest |n| for line-bundle checks")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-j", max_j, "largest spin for the Casimir checks")->check(CLI::NonNegativeNumber);
    verify->add_option("--degree-bound", degree_bound, "ideal-membership degree bound")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", jobs, "concurrent suites")->check(CLI::PositiveNumber);
    verify->add_option("--json", json_path, "write the JSON report to this path");
    verify->add_option("--seed", seed, "seed for randomized property sampling");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "normal form of an expression");
    std::string algebra = "sl2", expression;
    reduce->add_option("--algebra", algebra, "sl2, c3, ext, uq or so2");
    reduce->add_option("expression", expression, "expression to reduce")->required();

    // rmatrix
    auto* rmatrix = app.add_subcommand("rmatrix", "dump the R-matrix and projectors");
    long long n = 3;
    std::string emit = "json";
    rmatrix->add_option("--n", n, "matrix size parameter (2 or 3)");
    rmatrix->add_option("--emit", emit, "output format (json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    qorth_engine* engine = qorth_engine_new();
    if (!engine) {
        std::cerr << "engine construction failed: " << qorth_last_error() << "\n";
        return 1;
    }
    struct EngineGuard {
        qorth_engine* e;
        ~EngineGuard() { qorth_engine_free(e); }
    } guard{engine};

    if (verify->parsed()) {
        qorth_engine_set_int(engine, "max-n", max_n);
        qorth_engine_set_int(engine, "max-j", max_j);
        qorth_engine_set_int(engine, "degree-bound", degree_bound);
        qorth_engine_set_int(engine, "jobs", jobs);
        qorth_engine_set_int(engine, "seed", seed);
        return run_verify(engine, suite_names, all, json_path);
    }

    if (reduce->parsed()) {
        StringGuard out;
        qorth_status st = qorth_reduce(engine, algebra.c_str(), expression.c_str(), &out.value);
        if (st != QORTH_OK) {
            std::cerr << "reduce: " << qorth_last_error() << "\n";
            return st == QORTH_E_INTERNAL ? 1 : 2;
        }
        std::cout << out.value << "\n";
        return 0;
    }

    if (rmatrix->parsed()) {
        if (emit != "json") {
            std::cerr << "rmatrix: unsupported --emit value '" << emit << "'\n";
            return 2;
        }
        StringGuard out;
        qorth_status st = qorth_rmatrix_json(engine, static_cast<int>(n), &out.value);
        if (st != QORTH_OK) {
            std::cerr << "rmatrix: " << qorth_last_error() << "\n";
            return 2;
        }
        std::cout << out.value;
        return 0;
    }
    return 2;
}
