#include "harness.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "adversary.hpp"
#include "blocked_probe.hpp"
#include "errors.hpp"
#include "linear_probe.hpp"

namespace probelab {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Linear: return "linear";
        case Scheme::BlockedBidirectional: return "blocked-bidirectional";
        case Scheme::BlockedXor: return "blocked-xor";
    }
    return "?";
}

Scheme scheme_from_name(std::string_view name) {
    if (name == "linear") return Scheme::Linear;
    if (name == "blocked-bidirectional") return Scheme::BlockedBidirectional;
    if (name == "blocked-xor") return Scheme::BlockedXor;
    throw std::invalid_argument("unknown scheme: " + std::string(name));
}

const char* workload_name(Workload w) {
    switch (w) {
        case Workload::RandomKeys: return "random-keys";
        case Workload::Adversarial: return "adversarial";
        case Workload::MixedOps: return "mixed-ops";
    }
    return "?";
}

Workload workload_from_name(std::string_view name) {
    if (name == "random-keys") return Workload::RandomKeys;
    if (name == "adversarial") return Workload::Adversarial;
    if (name == "mixed-ops") return Workload::MixedOps;
    throw std::invalid_argument("unknown workload: " + std::string(name));
}

const char* op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::Insert: return "insert";
        case OpKind::SuccessfulSearch: return "successful_search";
        case OpKind::UnsuccessfulSearch: return "unsuccessful_search";
        case OpKind::Delete: return "delete";
        case OpKind::LoadedInsert: return "loaded_insert";
        default: return "?";
    }
}

ExperimentSpec ExperimentSpec::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    ExperimentSpec spec;
    bool have_alpha = false, have_k = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "scheme") {
            spec.scheme = scheme_from_name(value.get<std::string>());
        } else if (key == "family") {
            std::string f = value.get<std::string>();
            // accept "polynomial-3" as family + degree in one token
            if (const auto dash = f.find('-');
                dash != std::string::npos && f.substr(0, dash) == "polynomial") {
                spec.family = Family::Polynomial;
                spec.k = static_cast<std::uint32_t>(std::stoul(f.substr(dash + 1)));
                have_k = true;
            } else {
                spec.family = family_from_name(f);
            }
        } else if (key == "k") {
            spec.k = value.get<std::uint32_t>();
            have_k = true;
        } else if (key == "n") {
            spec.n = value.get<std::uint64_t>();
        } else if (key == "r") {
            spec.r = value.get<std::uint64_t>();
        } else if (key == "alpha") {
            spec.alpha = value.get<double>();
            have_alpha = true;
        } else if (key == "trials") {
            spec.trials = value.get<std::uint32_t>();
        } else if (key == "seed") {
            spec.seed = value.get<std::uint64_t>();
        } else if (key == "workload") {
            spec.workload = workload_from_name(value.get<std::string>());
        } else if (key == "op_count") {
            spec.op_count = value.get<std::uint64_t>();
        } else if (key == "delete_fraction") {
            spec.delete_fraction = value.get<double>();
        } else {
            throw std::invalid_argument("config: unknown field '" + key + "'");
        }
    }
    if (!have_k && spec.family != Family::Polynomial) spec.k = 2;
    if (!have_alpha && spec.r > 0)
        spec.alpha = static_cast<double>(spec.n) / static_cast<double>(spec.r);
    spec.validate();
    return spec;
}

ExperimentSpec ExperimentSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

void ExperimentSpec::validate() const {
    if (r < 2) throw std::invalid_argument("spec: r must be at least 2");
    if (n >= r) throw std::invalid_argument("spec: n must be below r");
    if ((scheme == Scheme::BlockedBidirectional || scheme == Scheme::BlockedXor) &&
        (r & (r - 1)) != 0)
        throw std::invalid_argument("spec: blocked schemes need a power-of-two r");
    if (std::abs(alpha * static_cast<double>(r) - static_cast<double>(n)) >
        1e-6 * static_cast<double>(r))
        throw std::invalid_argument("spec: alpha inconsistent with n/r");
    if (trials < 1) throw std::invalid_argument("spec: trials must be at least 1");
    if (family == Family::Polynomial) {
        if (k < 1 || k > 5)
            throw std::invalid_argument("spec: polynomial degree k must be in 1..5");
    } else if (k != 2) {
        throw std::invalid_argument("spec: cw and star families are pairwise (k = 2)");
    }
    if (workload == Workload::MixedOps) {
        if (op_count < 1)
            throw std::invalid_argument("spec: mixed-ops needs op_count >= 1");
        if (!(delete_fraction >= 0.0 && delete_fraction <= 1.0))
            throw std::invalid_argument("spec: delete_fraction must be in [0,1]");
        if (scheme == Scheme::Linear && delete_fraction > 0.0)
            throw std::invalid_argument("spec: the linear scheme has no deletions");
    }
    if (workload == Workload::Adversarial) {
        if (family == Family::Polynomial)
            throw std::invalid_argument("spec: adversarial workload targets cw or star");
        if (scheme != Scheme::Linear)
            throw std::invalid_argument("spec: adversarial workload uses the linear scheme");
    }
}

namespace {

// Universe prime for random-key workloads. The star family stores one table
// entry per universe element, so its universe stays proportional to n; the
// other families use a large prime to keep the uniformity slack r/p small.
PrimeModulus universe_prime(const ExperimentSpec& spec) {
    std::uint64_t lower;
    if (spec.family == Family::Star)
        lower = std::max<std::uint64_t>({1009, 16 * spec.n, spec.r + 1});
    else
        lower = std::max<std::uint64_t>(1ULL << 30, spec.r + 1);
    return next_prime_congruent(lower, 1, 2);
}

// Thin wrapper so trial loops are scheme-agnostic. Erase is blocked-only.
class AnyTable {
public:
    AnyTable(Scheme scheme, std::uint32_t r) {
        switch (scheme) {
            case Scheme::Linear: lin_.emplace(r); break;
            case Scheme::BlockedBidirectional:
                blk_.emplace(r, Traversal::Bidirectional);
                break;
            case Scheme::BlockedXor: blk_.emplace(r, Traversal::Xor); break;
        }
    }

    std::uint64_t insert(std::uint64_t key, std::uint32_t home) {
        return lin_ ? lin_->insert(key, home) : blk_->insert(key, home);
    }
    std::pair<bool, std::uint64_t> search(std::uint64_t key, std::uint32_t home) const {
        return lin_ ? lin_->search(key, home) : blk_->search(key, home);
    }
    std::uint64_t erase(std::uint64_t key, std::uint32_t home) {
        if (!blk_) throw std::logic_error("erase on a linear table");
        return blk_->erase(key, home);
    }
    bool blocked() const { return blk_.has_value(); }
    void set_repair_enabled(bool enabled) {
        if (blk_) blk_->set_repair_enabled(enabled);
    }

private:
    std::optional<LinearTable> lin_;
    std::optional<BlockedTable> blk_;
};

std::uint64_t fresh_key(Rng& rng, std::uint32_t p,
                        const std::unordered_set<std::uint64_t>& used) {
    for (;;) {
        const std::uint64_t x = rng.below(p);
        if (!used.contains(x)) return x;
    }
}

TrialResult run_random_keys_trial(const ExperimentSpec& spec, PrimeModulus p,
                                  std::uint32_t t, Rng trial_rng) {
    TrialResult res;
    res.trial = t;
    res.seed = trial_rng.seed();
    HashFunction h = sample(spec.family, spec.k, p, static_cast<std::uint32_t>(spec.r),
                            trial_rng);
    res.function = h.serialize();

    std::unordered_set<std::uint64_t> used;
    std::vector<std::uint64_t> keys;
    keys.reserve(spec.n);
    while (keys.size() < spec.n) {
        const std::uint64_t x = trial_rng.below(p.value());
        if (used.insert(x).second) keys.push_back(x);
    }

    AnyTable table(spec.scheme, static_cast<std::uint32_t>(spec.r));
    for (std::uint64_t x : keys) res.op(OpKind::Insert).record(table.insert(x, h(x)));
    for (std::uint64_t x : keys)
        res.op(OpKind::SuccessfulSearch).record(table.search(x, h(x)).second);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t x = fresh_key(trial_rng, p.value(), used);
        res.op(OpKind::UnsuccessfulSearch).record(table.search(x, h(x)).second);
    }
    if (table.blocked()) {
        // steady-state insertion cost: add a fresh key at load alpha, undo
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t x = fresh_key(trial_rng, p.value(), used);
            res.op(OpKind::LoadedInsert).record(table.insert(x, h(x)));
            table.erase(x, h(x));
        }
        // deletion cost at load alpha: remove a stored key, put it back
        for (int i = 0; i < 100 && !keys.empty(); ++i) {
            const std::uint64_t x = keys[trial_rng.below(keys.size())];
            res.op(OpKind::Delete).record(table.erase(x, h(x)));
            table.insert(x, h(x));
        }
    }
    return res;
}

TrialResult run_adversarial_trial(const AdversaryInstance& inst, Family family,
                                  std::uint32_t t, Rng trial_rng) {
    TrialResult res;
    res.trial = t;
    res.seed = trial_rng.seed();
    HashFunction h = sample(family, 2, inst.p, inst.r, trial_rng);
    res.function = h.serialize();

    LinearTable table(inst.r);
    for (std::uint64_t x : inst.keys())
        res.op(OpKind::Insert).record(table.insert(x, h(x)));
    return res;
}

TrialResult run_mixed_ops_trial(const ExperimentSpec& spec, PrimeModulus p,
                                std::uint32_t t, Rng trial_rng) {
    TrialResult res;
    res.trial = t;
    res.seed = trial_rng.seed();
    HashFunction h = sample(spec.family, spec.k, p, static_cast<std::uint32_t>(spec.r),
                            trial_rng);
    res.function = h.serialize();

    AnyTable table(spec.scheme, static_cast<std::uint32_t>(spec.r));
    std::unordered_set<std::uint64_t> used;
    std::vector<std::uint64_t> stored;
    for (std::uint64_t op = 0; op < spec.op_count; ++op) {
        const bool want_delete =
            !stored.empty() && trial_rng.unit() < spec.delete_fraction;
        if (want_delete || stored.size() >= spec.n) {
            if (stored.empty()) continue; // n == 0 streams do nothing
            const std::uint64_t idx = trial_rng.below(stored.size());
            const std::uint64_t x = stored[idx];
            res.op(OpKind::Delete).record(table.erase(x, h(x)));
            stored[idx] = stored.back();
            stored.pop_back();
        } else {
            const std::uint64_t x = fresh_key(trial_rng, p.value(), used);
            used.insert(x);
            res.op(OpKind::Insert).record(table.insert(x, h(x)));
            stored.push_back(x);
        }
    }
    return res;
}

} // namespace

std::vector<TrialResult> run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<TrialResult> results;
    results.reserve(spec.trials);
    Rng master(spec.seed);

    if (spec.workload == Workload::Adversarial) {
        // same construction and per-trial generators as measure_cost, so the
        // two entry points report identical step counts for one seed
        const PrimeModulus p = next_prime_congruent(
            std::max<std::uint64_t>(4 * spec.n + 1, 1009), 1, 4);
        const AdversaryInstance inst = build_instance(p, master);
        for (std::uint32_t t = 0; t < spec.trials; ++t)
            results.push_back(run_adversarial_trial(inst, spec.family, t, master.fork(t)));
        return results;
    }

    const PrimeModulus p = universe_prime(spec);
    for (std::uint32_t t = 0; t < spec.trials; ++t) {
        Rng trial_rng = master.fork(t);
        results.push_back(spec.workload == Workload::RandomKeys
                              ? run_random_keys_trial(spec, p, t, trial_rng)
                              : run_mixed_ops_trial(spec, p, t, trial_rng));
    }
    return results;
}

void emit_csv(const ExperimentSpec& spec, const std::vector<TrialResult>& results,
              std::ostream& out) {
    if (results.empty()) throw std::invalid_argument("emit_csv: no results");
    out << "scheme,family,k,n,r,alpha,trial,seed,op,count,mean_probes,max_probes,"
           "total_steps\n";
    std::ostringstream prefix;
    prefix << scheme_name(spec.scheme) << ',' << family_name(spec.family) << ','
           << spec.k << ',' << spec.n << ',' << spec.r << ',' << std::fixed
           << std::setprecision(6) << spec.alpha;
    for (const auto& res : results) {
        for (int kind = 0; kind < static_cast<int>(OpKind::kCount); ++kind) {
            const OpStats& stats = res.ops[static_cast<std::size_t>(kind)];
            if (stats.count == 0) continue;
            out << prefix.str() << ',' << res.trial << ',' << res.seed << ','
                << op_kind_name(static_cast<OpKind>(kind)) << ',' << stats.count
                << ',' << std::fixed << std::setprecision(6) << stats.mean() << ','
                << stats.max << ',' << stats.total << '\n';
        }
    }
}

void emit_csv(const ExperimentSpec& spec, const std::vector<TrialResult>& results,
              const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    emit_csv(spec, results, out);
    out.flush();
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

std::vector<std::string> differential_test(Scheme scheme, std::uint64_t op_count,
                                           std::uint64_t seed,
                                           const DiffOptions& options) {
    std::vector<std::string> report;
    auto fail = [&report](std::uint64_t op, const std::string& what) {
        std::ostringstream msg;
        msg << "op " << op << ": " << what;
        report.push_back(msg.str());
    };

    const std::uint32_t r = 1024;
    Rng rng(seed);
    const PrimeModulus p = next_prime_congruent(4 * r, 1, 2);
    HashFunction h = sample(Family::Polynomial, 3, p, r, rng);

    AnyTable table(scheme, r);
    if (options.skip_repair) table.set_repair_enabled(false);
    auto do_search = [&](std::uint64_t key, std::uint32_t home) {
        return table.search(key, home);
    };

    const bool blocked = table.blocked();
    const auto cap = static_cast<std::uint64_t>(options.max_alpha * r);
    std::unordered_set<std::uint64_t> reference;
    std::vector<std::uint64_t> live;

    for (std::uint64_t op = 0; op < op_count && report.empty(); ++op) {
        const double u = rng.unit();
        const double insert_cut = blocked ? 0.45 : 0.6;
        const double search_cut = blocked ? 0.75 : 1.0;
        if (u < insert_cut) {
            const std::uint64_t x = rng.below(p.value());
            if (reference.contains(x)) {
                try {
                    table.insert(x, h(x));
                    fail(op, "duplicate insert accepted");
                } catch (const duplicate_key_error&) {
                }
            } else if (reference.size() < cap) {
                table.insert(x, h(x));
                reference.insert(x);
                live.push_back(x);
                if (!do_search(x, h(x)).first) fail(op, "inserted key not found");
            }
        } else if (u < search_cut || live.empty()) {
            const std::uint64_t x =
                (rng.unit() < 0.5 && !live.empty()) ? live[rng.below(live.size())]
                                                    : rng.below(p.value());
            const bool found = do_search(x, h(x)).first;
            if (found != (reference.count(x) > 0))
                fail(op, found ? "phantom key reported present"
                               : "stored key reported absent");
        } else {
            const std::uint64_t idx = rng.below(live.size());
            const std::uint64_t x = live[idx];
            table.erase(x, h(x));
            reference.erase(x);
            live[idx] = live.back();
            live.pop_back();
            if (do_search(x, h(x)).first) fail(op, "deleted key still found");
        }
        if ((op & 1023) == 1023) {
            for (std::uint64_t x : live) {
                if (!do_search(x, h(x)).first) {
                    fail(op, "audit: stored key unreachable");
                    break;
                }
            }
        }
    }
    if (report.empty()) {
        for (std::uint64_t x : live) {
            if (!do_search(x, h(x)).first) {
                fail(op_count, "final audit: stored key unreachable");
                break;
            }
        }
    }
    return report;
}

} // namespace probelab
