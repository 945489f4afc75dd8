#include "qorth.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "qorth/parser.hpp"
#include "qorth/suites.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct qorth_engine {
    qorth::Options options;
    std::unique_ptr<qorth::Engine> impl;  // rebuilt lazily when options change
    std::vector<qorth::SuiteResult> results;

    qorth::Engine& get() {
        if (!impl) impl = std::make_unique<qorth::Engine>(options);
        return *impl;
    }
    const qorth::Engine& get() const {
        return const_cast<qorth_engine*>(this)->get();
    }
};

extern "C" {

const char* qorth_version(void) { return "1.0.0"; }

const char* qorth_last_error(void) { return g_last_error.c_str(); }

qorth_engine* qorth_engine_new(void) {
    try {
        return new qorth_engine();
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

void qorth_engine_free(qorth_engine* engine) { delete engine; }

qorth_status qorth_engine_set_int(qorth_engine* engine, const char* key, int64_t value) {
    if (!engine || !key) {
        set_error("null argument");
        return QORTH_E_INVALID;
    }
    std::string k = key;
    if (k == "max-n" && value >= 0)
        engine->options.max_n = static_cast<int>(value);
    else if (k == "max-j" && value >= 0)
        engine->options.max_j = static_cast<int>(value);
    else if (k == "degree-bound" && value >= 0)
        engine->options.degree_bound = static_cast<int>(value);
    else if (k == "jobs" && value >= 1)
        engine->options.jobs = static_cast<int>(value);
    else if (k == "seed")
        engine->options.seed = static_cast<uint64_t>(value);
    else {
        set_error("unknown option or invalid value: " + k);
        return QORTH_E_INVALID;
    }
    engine->impl.reset();  // options changed, rebuild on next use
    return QORTH_OK;
}

size_t qorth_suite_count(void) { return qorth::Engine::suite_names().size(); }

const char* qorth_suite_name(size_t index) {
    const auto& names = qorth::Engine::suite_names();
    if (index >= names.size()) return nullptr;
    return names[index].c_str();
}

qorth_status qorth_run_suite(qorth_engine* engine, const char* name) {
    if (!engine || !name) {
        set_error("null argument");
        return QORTH_E_INVALID;
    }
    if (!qorth::Engine::has_suite(name)) {
        set_error(std::string("unknown suite: ") + name);
        return QORTH_E_INVALID;
    }
    try {
        qorth::SuiteResult res = engine->get().run_suite(name);
        bool ok = res.ok();
        engine->results.push_back(std::move(res));
        return ok ? QORTH_OK : QORTH_E_FAILED;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QORTH_E_INTERNAL;
    }
}

qorth_status qorth_run_all(qorth_engine* engine) {
    if (!engine) {
        set_error("null engine");
        return QORTH_E_INVALID;
    }
    try {
        std::vector<qorth::SuiteResult> res = engine->get().run_all();
        bool ok = true;
        for (const auto& r : res)
            if (!r.ok()) ok = false;
        for (auto& r : res) engine->results.push_back(std::move(r));
        return ok ? QORTH_OK : QORTH_E_FAILED;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QORTH_E_INTERNAL;
    }
}

qorth_status qorth_report_json(const qorth_engine* engine, char** out) {
    if (!engine || !out) {
        set_error("null argument");
        return QORTH_E_INVALID;
    }
    *out = dup_string(qorth::Engine::report_json(engine->results));
    return *out ? QORTH_OK : QORTH_E_INTERNAL;
}

qorth_status qorth_report_human(const qorth_engine* engine, char** out) {
    if (!engine || !out) {
        set_error("null argument");
        return QORTH_E_INVALID;
    }
    *out = dup_string(qorth::Engine::report_human(engine->results));
    return *out ? QORTH_OK : QORTH_E_INTERNAL;
}

int qorth_report_exit_code(const qorth_engine* engine) {
    if (!engine) return 1;
    return qorth::Engine::exit_code(engine->results);
}

void qorth_report_clear(qorth_engine* engine) {
    if (engine) engine->results.clear();
}

qorth_status qorth_reduce(const qorth_engine* engine, const char* algebra, const char* expression,
                          char** out) {
    if (!engine || !algebra || !expression || !out) {
        set_error("null argument");
        return QORTH_E_INVALID;
    }
    try {
        *out = dup_string(engine->get().reduce_expression(algebra, expression));
        return *out ? QORTH_OK : QORTH_E_INTERNAL;
    } catch (const qorth::ParseError& e) {
        set_error(e.what());
        return QORTH_E_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return QORTH_E_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QORTH_E_INTERNAL;
    }
}

qorth_status qorth_rmatrix_json(const qorth_engine* engine, int n, char** out) {
    if (!engine || !out) {
        set_error("null argument");
        return QORTH_E_INVALID;
    }
    try {
        *out = dup_string(engine->get().rmatrix_json(n));
        return *out ? QORTH_OK : QORTH_E_INTERNAL;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return QORTH_E_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QORTH_E_INTERNAL;
    }
}

void qorth_string_free(char* text) { std::free(text); }

}  // extern "C"
