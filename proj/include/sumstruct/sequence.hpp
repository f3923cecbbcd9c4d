#pragma once

#include <cstdint>
#include <vector>

#include "sumstruct/element_set.hpp"

namespace sumstruct {

/// A sequence of not-necessarily-distinct elements: entries sorted by
/// element index, multiplicities >= 1, no duplicate indices.
class MultisetSequence {
public:
    struct Entry {
        std::uint32_t element;
        std::uint32_t multiplicity;
        bool operator==(const Entry&) const = default;
    };

    MultisetSequence() = default;

    /// From a flat list with repeats.
    static MultisetSequence from_items(const std::vector<std::uint32_t>& items);
    static MultisetSequence from_set(const ElementSet& set);

    const std::vector<Entry>& entries() const { return entries_; }
    std::uint32_t total_length() const { return total_; }
    bool empty() const { return entries_.empty(); }

    /// Distinct elements as a set over the given universe.
    ElementSet support(std::uint32_t universe) const;

    /// Flat expansion, sorted.
    std::vector<std::uint32_t> items() const;

    bool operator==(const MultisetSequence&) const = default;

private:
    std::vector<Entry> entries_;
    std::uint32_t total_ = 0;
};

} // namespace sumstruct
