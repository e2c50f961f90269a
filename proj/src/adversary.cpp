#include "adversary.hpp"

#include <cmath>
#include <stdexcept>

#include "linear_probe.hpp"

namespace probelab {

std::vector<std::uint64_t> AdversaryInstance::keys() const {
    std::vector<std::uint64_t> out;
    for (int idx : {first, second}) {
        const auto [start, len] = parts[static_cast<std::size_t>(idx)];
        for (std::uint32_t k = 0; k < len; ++k) out.push_back(start + k);
    }
    return out;
}

namespace {

AdversaryInstance make_instance(PrimeModulus p, int part1, int part2) {
    const std::uint32_t pp = p.value();
    if (pp < 1000)
        throw std::domain_error("build_instance: p must be >= 1000");
    if (pp % 4 != 1)
        throw std::domain_error("build_instance: p must be 1 mod 4");
    if (part1 == part2 || part1 < 0 || part2 < 0 || part1 > 7 || part2 > 7)
        throw std::domain_error("build_instance: need two distinct parts in 0..7");
    AdversaryInstance inst{p, (pp + 1) / 2, {}, part1, part2};
    const std::uint32_t base = pp / 8, extra = pp % 8;
    std::uint32_t start = 0;
    for (std::uint32_t i = 0; i < 8; ++i) {
        const std::uint32_t len = base + (i < extra ? 1 : 0);
        inst.parts[i] = {start, len};
        start += len;
    }
    return inst;
}

} // namespace

AdversaryInstance build_instance(PrimeModulus p, int part1, int part2) {
    return make_instance(p, part1, part2);
}

AdversaryInstance build_instance(PrimeModulus p, Rng& rng) {
    const auto pair_index = static_cast<std::uint32_t>(rng.below(28));
    // unordered pair from its rank
    std::uint32_t i = 0, offset = 0;
    while (offset + (7 - i) <= pair_index) {
        offset += 7 - i;
        ++i;
    }
    const std::uint32_t j = i + 1 + (pair_index - offset);
    return make_instance(p, static_cast<int>(i), static_cast<int>(j));
}

bounds::IntervalSet decompose_image(std::uint32_t u_start, std::uint32_t u_len,
                                    std::uint32_t a, std::uint32_t b,
                                    PrimeModulus p, std::uint32_t r) {
    const std::uint32_t pp = p.value();
    if (a == 0) throw std::domain_error("decompose_image: a must be nonzero");
    if (r == 0 || r > pp) throw std::domain_error("decompose_image: need 1 <= r <= p");
    if (u_start >= pp || u_len > pp - u_start)
        throw std::domain_error("decompose_image: U must fit in [p]");
    const std::uint32_t m = mod_inverse(a, p);

    bounds::IntervalSet out(r);
    auto emit_mod_p_interval = [&](std::uint64_t start, std::uint64_t len) {
        // interval of consecutive residues mod p; cut at the wrap, then cut
        // every run of integers at multiples of r
        while (len > 0) {
            const std::uint64_t run = std::min(len, pp - start);
            std::uint64_t lo = start, remaining = run;
            while (remaining > 0) {
                const std::uint64_t boundary = (lo / r + 1) * r;
                const std::uint64_t piece = std::min(remaining, boundary - lo);
                out.add(static_cast<std::uint32_t>(lo % r),
                        static_cast<std::uint32_t>(piece));
                lo += piece;
                remaining -= piece;
            }
            start = 0;
            len -= run;
        }
    };

    // stride-m progressions within U; h_hat advances by exactly 1 per step
    const std::uint64_t stride = m;
    for (std::uint64_t c = 0; c < std::min<std::uint64_t>(stride, u_len); ++c) {
        const std::uint64_t x0 = u_start + c;
        const std::uint64_t count = (u_len - c + stride - 1) / stride;
        const std::uint64_t y0 = (static_cast<std::uint64_t>(a) * x0 + b) % pp;
        emit_mod_p_interval(y0, count);
    }
    return out;
}

double AdversaryStats::mean() const {
    if (trials.empty()) return 0.0;
    double s = 0;
    for (const auto& t : trials) s += static_cast<double>(t.total_steps);
    return s / static_cast<double>(trials.size());
}

double AdversaryStats::stddev() const {
    if (trials.size() < 2) return 0.0;
    const double m = mean();
    double s = 0;
    for (const auto& t : trials) {
        const double d = static_cast<double>(t.total_steps) - m;
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(trials.size() - 1));
}

AdversaryTrial run_trial(const AdversaryInstance& inst, const HashFunction& h) {
    LinearTable table(inst.r);
    for (std::uint64_t x : inst.keys()) table.insert(x, h(x));
    AdversaryTrial rec{};
    rec.total_steps = table.total_cost();
    if (const auto* cw = h.get_if<CWHash>()) {
        rec.a = cw->a;
        rec.b = cw->b;
        rec.m = mod_inverse(cw->a, inst.p);
    } else if (const auto* st = h.get_if<StarHash>()) {
        rec.a = st->a;
        rec.b = st->b;
        rec.m = st->a == 0 ? 0 : mod_inverse(st->a, inst.p);
    }
    return rec;
}

AdversaryStats measure_cost(const AdversaryInstance& inst, Family kind, int trials,
                            Rng& rng) {
    if (trials < 1) throw std::domain_error("measure_cost: trials must be >= 1");
    if (kind != Family::CarterWegman && kind != Family::Star)
        throw std::domain_error("measure_cost: family must be cw or star");
    AdversaryStats stats;
    stats.trials.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        // per-trial generator keyed on (master seed, trial index), so trials
        // are reproducible independently of execution order
        Rng trial_rng = rng.fork(static_cast<std::uint64_t>(t));
        HashFunction h = sample(kind, 2, inst.p, inst.r, trial_rng);
        stats.trials.push_back(run_trial(inst, h));
    }
    return stats;
}

} // namespace probelab
