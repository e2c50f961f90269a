#include "blocked_probe.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "errors.hpp"

namespace probelab {

int bp_metric(std::uint32_t y1, std::uint32_t y2) {
    return std::bit_width(y1 ^ y2);
}

std::uint32_t probe_slot(std::uint32_t home, std::uint32_t j, Traversal t) {
    if (j == 0) return home;
    if (t == Traversal::Xor) return home ^ j;
    // bidirectional: probes 2^i .. 2^{i+1}-1 sweep the sibling half of the
    // level-(i+1) block, upward or downward depending on bit i of home
    const int i = std::bit_width(j) - 1;
    const std::uint32_t w = 1u << i;
    const std::uint32_t base = static_cast<std::uint32_t>(block_align(home, w));
    if ((home & w) == 0) return base + j;           // home mod 2^i == home mod 2^{i+1}
    return base - 1 - (j - w);
}

std::vector<std::uint32_t> probe_sequence(std::uint32_t home, std::uint32_t r,
                                          Traversal t) {
    if (!std::has_single_bit(r)) throw std::domain_error("probe_sequence: r must be a power of two");
    if (home >= r) throw std::domain_error("probe_sequence: home out of range");
    std::vector<std::uint32_t> seq(r);
    for (std::uint32_t j = 0; j < r; ++j) seq[j] = probe_slot(home, j, t);
    return seq;
}

BlockedTable::BlockedTable(std::uint32_t r, Traversal variant)
    : slots_(r), variant_(variant) {
    if (r == 0 || !std::has_single_bit(r))
        throw std::domain_error("BlockedTable: r must be a power of two");
    log_r_ = std::bit_width(r) - 1;
}

std::pair<std::int64_t, std::uint64_t> BlockedTable::locate(std::uint64_t key,
                                                            std::uint32_t home) const {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    std::uint64_t probes = 0;
    std::uint32_t level_end = 1;
    int level = 0;
    bool stop = false;
    for (std::uint32_t j = 0; j < r; ++j) {
        const std::uint32_t y = probe_slot(home, j, variant_);
        ++probes;
        const Slot& s = slots_[y];
        if (!s.occupied) {
            stop = true; // rule (b), after the block is exhausted
        } else if (s.key == key) {
            return {y, probes}; // rule (a), immediate
        } else if (bp_metric(s.home, y) > level) {
            stop = true; // rule (c): occupant homed outside this block
        }
        if (j + 1 == level_end) {
            if (stop) return {-1, probes};
            ++level;
            level_end <<= 1;
        }
    }
    return {-1, probes};
}

std::pair<bool, std::uint64_t> BlockedTable::search(std::uint64_t key,
                                                    std::uint32_t home) const {
    if (home >= slots_.size())
        throw std::domain_error("BlockedTable::search: home out of range");
    auto [idx, probes] = locate(key, home);
    return {idx >= 0, probes};
}

std::uint64_t BlockedTable::insert(std::uint64_t key, std::uint32_t home) {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    if (home >= r) throw std::domain_error("BlockedTable::insert: home out of range");
    if (count_ >= r) throw capacity_error("BlockedTable::insert: table full");
    if (locate(key, home).first >= 0)
        throw duplicate_key_error("BlockedTable::insert: key already present");

    std::uint64_t probes = 0;
    std::uint64_t cur_key = key;
    std::uint32_t cur_home = home;
    std::uint32_t start_j = 0;
    std::uint32_t skip = r; // slot the displaced key was just evicted from
    for (;;) {
        bool displaced = false;
        for (std::uint32_t j = start_j; j < r; ++j) {
            const std::uint32_t y = probe_slot(cur_home, j, variant_);
            if (y == skip) continue;
            ++probes;
            Slot& s = slots_[y];
            if (!s.occupied) {
                s = {cur_key, cur_home, true};
                ++count_;
                return probes;
            }
            const int d_occ = bp_metric(s.home, y);
            if (bp_metric(cur_home, y) < d_occ) {
                const std::uint64_t evicted_key = s.key;
                const std::uint32_t evicted_home = s.home;
                s.key = cur_key;
                s.home = cur_home;
                cur_key = evicted_key;
                cur_home = evicted_home;
                // resume at the start of the evicted key's level-d_occ shell
                start_j = 1u << (d_occ - 1);
                skip = y;
                displaced = true;
                break;
            }
        }
        if (!displaced)
            throw capacity_error("BlockedTable::insert: no free slot reachable");
    }
}

std::uint64_t BlockedTable::erase(std::uint64_t key, std::uint32_t home) {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    if (home >= r) throw std::domain_error("BlockedTable::erase: home out of range");
    auto [idx, probes] = locate(key, home);
    if (idx < 0) return probes;

    std::uint32_t y = static_cast<std::uint32_t>(idx);
    std::uint32_t hx = slots_[y].home;
    slots_[y].occupied = false;
    --count_;
    if (!repair_enabled_) return probes;

    for (;;) {
        const int i = bp_metric(hx, y);
        // Candidates (keys strictly closer to home in the hole) can sit in
        // several shells at once; the hole must receive the one homed nearest
        // to it, or the new occupant is foreign to another candidate's
        // guarded blocks. An empty slot in a shell rules out candidates in
        // all wider shells, so the scan stops after that shell.
        std::int64_t best = -1;
        int best_dist = 0;
        bool saw_empty = false;
        for (int level = i; level <= log_r_ && !saw_empty; ++level) {
            const std::uint32_t width = 1u << level;
            const std::uint32_t lo = static_cast<std::uint32_t>(block_align(hx, width));
            std::uint32_t skip_lo = lo + width, skip_hi = lo + width;
            if (level > 0) {
                skip_lo = static_cast<std::uint32_t>(block_align(hx, width >> 1));
                skip_hi = skip_lo + (width >> 1);
            }
            for (std::uint32_t z = lo; z < lo + width; ++z) {
                if (z == y) continue;
                if (z >= skip_lo && z < skip_hi) continue;
                ++probes;
                const Slot& s = slots_[z];
                if (!s.occupied) {
                    saw_empty = true;
                    continue;
                }
                const int dz = bp_metric(s.home, y);
                if (dz < bp_metric(s.home, z) && (best < 0 || dz < best_dist)) {
                    best = z; // ties keep the lowest slot
                    best_dist = dz;
                }
            }
        }
        if (best < 0) return probes;
        const auto z = static_cast<std::uint32_t>(best);
        slots_[y] = slots_[z];
        slots_[z].occupied = false;
        hx = slots_[y].home;
        y = z;
    }
}

bool BlockedTable::check_level_invariant() const {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    for (std::uint32_t y = 0; y < r; ++y) {
        const Slot& s = slots_[y];
        if (!s.occupied) continue;
        const int i = bp_metric(s.home, y);
        for (int j = 0; j < i; ++j) {
            const std::uint32_t width = 1u << j;
            const std::uint32_t lo = static_cast<std::uint32_t>(block_align(s.home, width));
            for (std::uint32_t z = lo; z < lo + width; ++z) {
                const Slot& t = slots_[z];
                if (!t.occupied) return false;
                if (block_align(t.home, width) != lo) return false;
            }
        }
    }
    return true;
}

bool BlockedTable::check_metric_optimality() const {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    std::vector<std::uint32_t> empties;
    for (std::uint32_t z = 0; z < r; ++z)
        if (!slots_[z].occupied) empties.push_back(z);
    for (std::uint32_t y = 0; y < r; ++y) {
        const Slot& s = slots_[y];
        if (!s.occupied) continue;
        const int m = bp_metric(s.home, y);
        for (std::uint32_t z : empties)
            if (bp_metric(s.home, z) < m) return false;
    }
    return true;
}

void BlockedTable::dump(std::ostream& out) const {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    for (std::uint32_t i = 0; i < r; ++i) {
        const Slot& s = slots_[i];
        if (s.occupied) {
            const std::uint32_t disp = i >= s.home ? i - s.home : i + r - s.home;
            out << i << ',' << s.key << ',' << s.home << ',' << disp << ','
                << bp_metric(s.home, i) << '\n';
        } else {
            out << i << ",EMPTY\n";
        }
    }
}

} // namespace probelab
