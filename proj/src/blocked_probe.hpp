#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace probelab {

/// x - (x mod a), for a a power of two (works for any a >= 1).
inline std::uint64_t block_align(std::uint64_t x, std::uint64_t a) {
    return x - x % a;
}

/// Level of the smallest dyadic block aligned at y1 that contains y2:
/// 0 when y1 == y2, otherwise one past the index of the highest differing bit.
int bp_metric(std::uint32_t y1, std::uint32_t y2);

enum class Traversal { Bidirectional, Xor };

/// Slot inspected by probe number j (j in [r]) of a search starting at home.
/// For every i the first 2^i probes cover exactly the dyadic block of size
/// 2^i around home.
std::uint32_t probe_slot(std::uint32_t home, std::uint32_t j, Traversal t);

std::vector<std::uint32_t> probe_sequence(std::uint32_t home, std::uint32_t r,
                                          Traversal t);

/// Open addressing over nested power-of-two blocks. Searches stop at dyadic
/// level boundaries, insertions evict occupants that are metrically farther
/// from their home, deletions repair by pulling keys closer.
class BlockedTable {
public:
    struct Slot {
        std::uint64_t key = 0;
        std::uint32_t home = 0;
        bool occupied = false;
    };

    BlockedTable(std::uint32_t r, Traversal variant);

    std::uint64_t insert(std::uint64_t key, std::uint32_t home);
    std::pair<bool, std::uint64_t> search(std::uint64_t key, std::uint32_t home) const;

    /// Removes the key if present and repairs; returns slots inspected for
    /// search plus repair. Absent key costs the unsuccessful search.
    std::uint64_t erase(std::uint64_t key, std::uint32_t home);

    std::uint32_t size() const { return count_; }
    std::uint32_t capacity() const { return static_cast<std::uint32_t>(slots_.size()); }
    Traversal variant() const { return variant_; }
    const Slot& slot(std::uint32_t i) const { return slots_.at(i); }

    /// For every key at level i, all blocks around its home below level i are
    /// fully occupied by keys homed inside them.
    bool check_level_invariant() const;

    /// No stored key has an empty slot strictly closer to its home.
    bool check_metric_optimality() const;

    // Fault hook for the differential harness: with repair off, deletions
    // leave the table in a state the search stop rules no longer cover.
    void set_repair_enabled(bool enabled) { repair_enabled_ = enabled; }

    /// `index,key,home,displacement,level` or `index,EMPTY` per line.
    void dump(std::ostream& out) const;

private:
    // slot index (or -1) and probes, applying the level stop rules
    std::pair<std::int64_t, std::uint64_t> locate(std::uint64_t key,
                                                  std::uint32_t home) const;

    std::vector<Slot> slots_;
    std::uint32_t count_ = 0;
    int log_r_ = 0;
    Traversal variant_;
    bool repair_enabled_ = true;
};

} // namespace probelab
