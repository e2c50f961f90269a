#include "probelab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "adversary.hpp"
#include "blocked_probe.hpp"
#include "bounds.hpp"
#include "errors.hpp"
#include "field_hash.hpp"
#include "harness.hpp"
#include "linear_probe.hpp"
#include "verify.hpp"

struct probelab_hash {
    probelab::HashFunction fn;
};

struct probelab_table {
    std::optional<probelab::LinearTable> lin;
    std::optional<probelab::BlockedTable> blk;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
probelab_status wrap(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const probelab::duplicate_key_error& e) {
        g_last_error = e.what();
        return PROBELAB_ERR_DUPLICATE_KEY;
    } catch (const probelab::capacity_error& e) {
        g_last_error = e.what();
        return PROBELAB_ERR_CAPACITY;
    } catch (const probelab::no_prime_error& e) {
        g_last_error = e.what();
        return PROBELAB_ERR_NO_PRIME;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PROBELAB_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return PROBELAB_ERR_DOMAIN;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        return PROBELAB_ERR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PROBELAB_ERR_INTERNAL;
    }
}

probelab_status require(bool ok, const char* message) {
    if (ok) return PROBELAB_OK;
    g_last_error = message;
    return PROBELAB_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* probelab_last_error(void) { return g_last_error.c_str(); }

void probelab_string_free(char* s) { std::free(s); }

probelab_status probelab_hash_sample(const char* family, uint32_t k, uint64_t p,
                                     uint32_t r, uint64_t seed,
                                     probelab_hash** out) {
    if (auto st = require(family && out, "null argument")) return st;
    return wrap([&] {
        probelab::Rng rng(seed);
        auto fn = probelab::sample(probelab::family_from_name(family), k,
                                   probelab::PrimeModulus(p), r, rng);
        *out = new probelab_hash{std::move(fn)};
        return PROBELAB_OK;
    });
}

probelab_status probelab_hash_parse(const char* text, probelab_hash** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return wrap([&] {
        *out = new probelab_hash{probelab::HashFunction::parse(text)};
        return PROBELAB_OK;
    });
}

probelab_status probelab_hash_serialize(const probelab_hash* h, char** out) {
    if (auto st = require(h && out, "null argument")) return st;
    return wrap([&] {
        *out = dup_string(h->fn.serialize());
        return *out ? PROBELAB_OK : PROBELAB_ERR_INTERNAL;
    });
}

probelab_status probelab_hash_eval(const probelab_hash* h, uint64_t x,
                                   uint32_t* out) {
    if (auto st = require(h && out, "null argument")) return st;
    return wrap([&] {
        *out = h->fn(x);
        return PROBELAB_OK;
    });
}

void probelab_hash_free(probelab_hash* h) { delete h; }

probelab_status probelab_table_create_linear(uint32_t r, probelab_table** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return wrap([&] {
        auto t = std::make_unique<probelab_table>();
        t->lin.emplace(r);
        *out = t.release();
        return PROBELAB_OK;
    });
}

probelab_status probelab_table_create_blocked(uint32_t r, const char* traversal,
                                              probelab_table** out) {
    if (auto st = require(traversal && out, "null argument")) return st;
    return wrap([&] {
        probelab::Traversal variant;
        if (std::strcmp(traversal, "bidirectional") == 0)
            variant = probelab::Traversal::Bidirectional;
        else if (std::strcmp(traversal, "xor") == 0)
            variant = probelab::Traversal::Xor;
        else
            throw std::invalid_argument("traversal must be bidirectional or xor");
        auto t = std::make_unique<probelab_table>();
        t->blk.emplace(r, variant);
        *out = t.release();
        return PROBELAB_OK;
    });
}

probelab_status probelab_table_insert(probelab_table* t, uint64_t key,
                                      uint32_t home, uint64_t* probes) {
    if (auto st = require(t != nullptr, "null table")) return st;
    return wrap([&] {
        const uint64_t n = t->lin ? t->lin->insert(key, home)
                                  : t->blk->insert(key, home);
        if (probes) *probes = n;
        return PROBELAB_OK;
    });
}

probelab_status probelab_table_search(const probelab_table* t, uint64_t key,
                                      uint32_t home, int* found,
                                      uint64_t* probes) {
    if (auto st = require(t && found, "null argument")) return st;
    return wrap([&] {
        const auto [hit, n] = t->lin ? t->lin->search(key, home)
                                     : t->blk->search(key, home);
        *found = hit ? 1 : 0;
        if (probes) *probes = n;
        return PROBELAB_OK;
    });
}

probelab_status probelab_table_erase(probelab_table* t, uint64_t key,
                                     uint32_t home, uint64_t* probes) {
    if (auto st = require(t != nullptr, "null table")) return st;
    return wrap([&] {
        if (!t->blk)
            throw std::invalid_argument("erase is only defined for blocked tables");
        const uint64_t n = t->blk->erase(key, home);
        if (probes) *probes = n;
        return PROBELAB_OK;
    });
}

probelab_status probelab_table_size(const probelab_table* t, uint32_t* out) {
    if (auto st = require(t && out, "null argument")) return st;
    *out = t->lin ? t->lin->size() : t->blk->size();
    return PROBELAB_OK;
}

probelab_status probelab_table_total_cost(const probelab_table* t, uint64_t* out) {
    if (auto st = require(t && out, "null argument")) return st;
    return wrap([&] {
        if (!t->lin)
            throw std::invalid_argument("total cost is only defined for linear tables");
        *out = t->lin->total_cost();
        return PROBELAB_OK;
    });
}

void probelab_table_free(probelab_table* t) { delete t; }

probelab_status probelab_bounds_row(double alpha, double eps, double out[6]) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return wrap([&] {
        out[0] = probelab::bounds::t_alpha_eps(alpha, eps);
        const auto b = probelab::bounds::theorem4_bounds(alpha, eps);
        out[1] = b.unsuccessful;
        out[2] = b.insertion;
        out[3] = b.deletion;
        out[4] = b.successful;
        out[5] = probelab::bounds::full_independence_unsuccessful_bound(alpha);
        return PROBELAB_OK;
    });
}

probelab_status probelab_bounds_high_load(double alpha, double eps, double* out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return wrap([&] {
        *out = probelab::bounds::theorem5_bound(alpha, eps);
        return PROBELAB_OK;
    });
}

probelab_status probelab_experiment_run(const char* config_path,
                                        const char* csv_path) {
    if (auto st = require(config_path && csv_path, "null argument")) return st;
    return wrap([&] {
        const auto spec = probelab::ExperimentSpec::from_file(config_path);
        const auto results = probelab::run_experiment(spec);
        if (std::strcmp(csv_path, "-") == 0)
            probelab::emit_csv(spec, results, std::cout);
        else
            probelab::emit_csv(spec, results, std::string(csv_path));
        return PROBELAB_OK;
    });
}

probelab_status probelab_adversary_run(uint32_t log_r, uint32_t trials,
                                       const char* family, uint64_t seed,
                                       const char* csv_path) {
    if (auto st = require(family && csv_path, "null argument")) return st;
    return wrap([&] {
        if (log_r < 5 || log_r > 24)
            throw std::invalid_argument("adversary: log_r must be in 5..24");
        const auto kind = probelab::family_from_name(family);
        // smallest p = 1 (mod 4) with ceil(p/2) >= 2^log_r
        const auto p = probelab::next_prime_congruent(
            std::max<uint64_t>(1009, (1ULL << (log_r + 1)) - 1), 1, 4);
        probelab::Rng rng(seed);
        const auto inst = probelab::build_instance(p, rng);
        const auto stats = probelab::measure_cost(inst, kind, static_cast<int>(trials), rng);

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (std::strcmp(csv_path, "-") != 0) {
            file.open(csv_path);
            if (!file) throw std::runtime_error(std::string("cannot open ") + csv_path);
            out = &file;
        }
        *out << "r,trial,a,m,total_steps\n";
        for (std::size_t t = 0; t < stats.trials.size(); ++t) {
            const auto& rec = stats.trials[t];
            *out << inst.r << ',' << t << ',' << rec.a << ',' << rec.m << ','
                 << rec.total_steps << '\n';
        }
        out->flush();
        if (!*out) throw std::runtime_error("write failed");
        return PROBELAB_OK;
    });
}

probelab_status probelab_verify(const char* suite, char** detail) {
    if (auto st = require(suite != nullptr, "null argument")) return st;
    return wrap([&] {
        const auto result = probelab::run_suite(suite);
        if (detail) *detail = dup_string(result.detail);
        if (result.passed) return PROBELAB_OK;
        g_last_error = result.detail;
        return PROBELAB_ERR_VERIFICATION;
    });
}

} // extern "C"
