#include "sumstruct/sequence.hpp"

#include <algorithm>

namespace sumstruct {

MultisetSequence MultisetSequence::from_items(const std::vector<std::uint32_t>& items) {
    MultisetSequence s;
    std::vector<std::uint32_t> sorted = items;
    std::sort(sorted.begin(), sorted.end());
    for (auto x : sorted) {
        if (!s.entries_.empty() && s.entries_.back().element == x)
            ++s.entries_.back().multiplicity;
        else
            s.entries_.push_back({x, 1});
        ++s.total_;
    }
    return s;
}

MultisetSequence MultisetSequence::from_set(const ElementSet& set) {
    MultisetSequence s;
    for (auto x : set.members()) s.entries_.push_back({x, 1});
    s.total_ = static_cast<std::uint32_t>(s.entries_.size());
    return s;
}

ElementSet MultisetSequence::support(std::uint32_t universe) const {
    ElementSet out(universe);
    for (const auto& e : entries_) out.set(e.element);
    return out;
}

std::vector<std::uint32_t> MultisetSequence::items() const {
    std::vector<std::uint32_t> out;
    out.reserve(total_);
    for (const auto& e : entries_)
        for (std::uint32_t i = 0; i < e.multiplicity; ++i) out.push_back(e.element);
    return out;
}

} // namespace sumstruct
