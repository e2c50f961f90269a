#include "linear_probe.hpp"

#include <ostream>
#include <stdexcept>

#include "errors.hpp"

namespace probelab {

bool fully_loaded(const std::vector<std::uint32_t>& homes, std::uint32_t start,
                  std::uint32_t length, std::uint32_t r) {
    if (length > r) throw std::domain_error("fully_loaded: length > r");
    if (length == 0) return true;
    std::uint64_t hits = 0;
    for (std::uint32_t h : homes) {
        const std::uint32_t rel = h >= start ? h - start : h + r - start;
        if (rel < length) ++hits;
    }
    return hits >= length;
}

LinearTable::LinearTable(std::uint32_t r) : slots_(r) {
    if (r < 2) throw std::domain_error("LinearTable: r must be >= 2");
}

std::uint64_t LinearTable::insert(std::uint64_t key, std::uint32_t home) {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    if (home >= r) throw std::domain_error("LinearTable::insert: home out of range");
    if (count_ + 1 >= r)
        throw capacity_error("LinearTable::insert: table at capacity (one slot kept free)");
    if (search(key, home).first)
        throw duplicate_key_error("LinearTable::insert: key already present");

    std::uint64_t probes = 0;
    std::uint64_t cur_key = key;
    std::uint32_t cur_home = home;
    std::uint32_t offset = 0;
    for (;;) {
        std::uint32_t pos = cur_home + offset;
        if (pos >= r) pos -= r;
        ++probes;
        Slot& s = slots_[pos];
        if (!s.occupied) {
            s = {cur_key, cur_home, true};
            ++count_;
            probes_total_ += probes;
            return probes;
        }
        // keep scanning while the occupant's home lies in cur_home + [offset+1]
        const std::uint32_t rel = s.home >= cur_home ? s.home - cur_home
                                                     : s.home + r - cur_home;
        if (rel <= offset) {
            ++offset;
            continue;
        }
        // displace: the occupant resumes its own probe sequence from here
        const std::uint32_t occ_disp = pos >= s.home ? pos - s.home : pos + r - s.home;
        const std::uint64_t next_key = s.key;
        const std::uint32_t next_home = s.home;
        s.key = cur_key;
        s.home = cur_home;
        cur_key = next_key;
        cur_home = next_home;
        offset = occ_disp + 1;
    }
}

std::pair<bool, std::uint64_t> LinearTable::search(std::uint64_t key,
                                                   std::uint32_t home) const {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    if (home >= r) throw std::domain_error("LinearTable::search: home out of range");
    std::uint64_t probes = 0;
    std::uint32_t pos = home;
    for (std::uint32_t i = 0; i < r; ++i) {
        ++probes;
        const Slot& s = slots_[pos];
        if (!s.occupied) return {false, probes};
        if (s.key == key) return {true, probes};
        pos = pos + 1 == r ? 0 : pos + 1;
    }
    return {false, probes};
}

std::uint32_t LinearTable::displacement(std::uint32_t slot_index) const {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    const Slot& s = slots_.at(slot_index);
    if (!s.occupied) throw std::domain_error("displacement of an empty slot");
    return slot_index >= s.home ? slot_index - s.home : slot_index + r - s.home;
}

std::uint64_t LinearTable::total_cost() const {
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].occupied) total += 1 + displacement(i);
    }
    return total;
}

bool LinearTable::check_no_gaps() const {
    const auto r = static_cast<std::uint32_t>(slots_.size());
    for (std::uint32_t i = 0; i < r; ++i) {
        if (!slots_[i].occupied) continue;
        std::uint32_t pos = slots_[i].home;
        while (pos != i) {
            if (!slots_[pos].occupied) return false;
            pos = pos + 1 == r ? 0 : pos + 1;
        }
    }
    return true;
}

void LinearTable::dump(std::ostream& out) const {
    for (std::uint32_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].occupied) {
            out << i << ',' << slots_[i].key << ',' << slots_[i].home << ','
                << displacement(i) << '\n';
        } else {
            out << i << ",EMPTY\n";
        }
    }
}

} // namespace probelab
