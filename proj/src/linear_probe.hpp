#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace probelab {

/// True iff at least `length` of the given home positions fall in the cyclic
/// interval [start, start+length) modulo r.
bool fully_loaded(const std::vector<std::uint32_t>& homes, std::uint32_t start,
                  std::uint32_t length, std::uint32_t r);

/// Linear probing table. The placement policy lets an incoming key claim a
/// slot whose occupant's home lies outside the scanned prefix; the displaced
/// key then continues probing from that slot. Total insertion steps are
/// independent of insertion order under this policy.
class LinearTable {
public:
    struct Slot {
        std::uint64_t key = 0;
        std::uint32_t home = 0;
        bool occupied = false;
    };

    explicit LinearTable(std::uint32_t r);

    /// Returns slots inspected across the whole displacement chain.
    std::uint64_t insert(std::uint64_t key, std::uint32_t home);

    /// Probes count inspected slots including the terminating one.
    std::pair<bool, std::uint64_t> search(std::uint64_t key, std::uint32_t home) const;

    /// Sum over stored keys of 1 + displacement. Always equals the sum of
    /// probe counts returned by the inserts that built the table.
    std::uint64_t total_cost() const;

    std::uint64_t probes_total() const { return probes_total_; }
    std::uint32_t size() const { return count_; }
    std::uint32_t capacity() const { return static_cast<std::uint32_t>(slots_.size()); }
    const Slot& slot(std::uint32_t i) const { return slots_.at(i); }

    std::uint32_t displacement(std::uint32_t slot_index) const;

    /// No-gap invariant: the cyclic path from each key's home to its slot is
    /// fully occupied.
    bool check_no_gaps() const;

    /// One line per slot: `index,key,home,displacement` or `index,EMPTY`.
    void dump(std::ostream& out) const;

private:
    std::vector<Slot> slots_;
    std::uint32_t count_ = 0;
    std::uint64_t probes_total_ = 0;
};

} // namespace probelab
