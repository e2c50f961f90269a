#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "field_hash.hpp"

namespace probelab {

enum class Scheme { Linear, BlockedBidirectional, BlockedXor };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(std::string_view name);

enum class Workload { RandomKeys, Adversarial, MixedOps };

const char* workload_name(Workload w);
Workload workload_from_name(std::string_view name);

/// One experiment configuration; mirrors the flat JSON config file.
struct ExperimentSpec {
    Scheme scheme = Scheme::Linear;
    Family family = Family::Polynomial;
    std::uint32_t k = 5;        // independence degree, 1..5 (2 for cw/star)
    std::uint64_t n = 0;        // keys stored
    std::uint64_t r = 0;        // table size
    double alpha = 0.0;         // redundant, validated against n/r
    std::uint32_t trials = 1;
    std::uint64_t seed = 0;
    Workload workload = Workload::RandomKeys;
    std::uint64_t op_count = 0;       // mixed-ops only
    double delete_fraction = 0.0;     // mixed-ops only

    static ExperimentSpec from_json_text(const std::string& text);
    static ExperimentSpec from_file(const std::string& path);
    void validate() const; // throws std::invalid_argument with a field message
};

/// Probe-count aggregate for one operation kind within a trial.
struct OpStats {
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    std::uint64_t max = 0;

    void record(std::uint64_t probes) {
        ++count;
        total += probes;
        if (probes > max) max = probes;
    }
    double mean() const { return count ? static_cast<double>(total) / count : 0.0; }
};

enum class OpKind : int {
    Insert = 0,          // insertions while filling the table
    SuccessfulSearch,    // every stored key, at final load
    UnsuccessfulSearch,  // fresh absent keys, at final load
    Delete,              // erase of a stored key (blocked schemes)
    LoadedInsert,        // insert of a fresh key at final load (blocked schemes)
    kCount
};

const char* op_kind_name(OpKind k);

struct TrialResult {
    std::uint32_t trial = 0;
    std::uint64_t seed = 0;     // per-trial derived generator seed
    std::string function;       // serialized sampled hash function
    std::array<OpStats, static_cast<int>(OpKind::kCount)> ops;

    const OpStats& op(OpKind k) const { return ops[static_cast<int>(k)]; }
    OpStats& op(OpKind k) { return ops[static_cast<int>(k)]; }
};

/// Runs all trials. Deterministic function of (spec, seed); trial t uses a
/// generator forked from the master seed and the trial index.
std::vector<TrialResult> run_experiment(const ExperimentSpec& spec);

/// Pinned schema:
/// scheme,family,k,n,r,alpha,trial,seed,op,count,mean_probes,max_probes,total_steps
/// One row per (trial, op kind) with nonzero count; means with 6 decimals.
void emit_csv(const ExperimentSpec& spec, const std::vector<TrialResult>& results,
              std::ostream& out);
void emit_csv(const ExperimentSpec& spec, const std::vector<TrialResult>& results,
              const std::string& path);

struct DiffOptions {
    bool skip_repair = false; // fault injection: disable deletion repair
    double max_alpha = 0.9;   // load ceiling for the generated stream
};

/// Replays a random insert/delete/search stream against the table and a
/// reference set; returns a description of the first divergence, or an empty
/// list when the table agrees everywhere.
std::vector<std::string> differential_test(Scheme scheme, std::uint64_t op_count,
                                           std::uint64_t seed,
                                           const DiffOptions& options = {});

} // namespace probelab
