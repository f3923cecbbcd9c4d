#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "sumstruct/config.hpp"
#include "sumstruct/element_set.hpp"
#include "sumstruct/sumset.hpp"

namespace sumstruct {

enum class VisitAction {
    descend, // extend this subset with later universe elements
    prune,   // do not extend; continue with siblings
};

/// One node of the subset enumeration: the current subset (as universe
/// positions), its nonempty-subset-sum closure, and where extension would
/// continue.
struct DfsNode {
    const std::vector<std::uint32_t>& chosen_positions; // stack, universe positions
    const ElementSet& closure;                          // subset sums of the chosen prefix
    std::uint32_t depth;                                // == chosen_positions.size()
    std::uint32_t next_position;                        // first position eligible to extend
};

struct DfsStats {
    std::uint64_t nodes = 0;
    bool truncated = false;
};

/// Depth-first enumeration of subsets of `universe` with an incremental
/// closure stack: every subset is visited exactly once (2^k nodes
/// unpruned, empty set included), children extend in universe order, and
/// each edge costs one closure step. The visitor may carry its own
/// per-depth state; `leave` (optional) is called after a node's subtree.
///
/// Budget exhaustion abandons the remainder and flags the stats.
template <typename Visitor>
DfsStats dfs_closure_enumerate(const GroupSpec& g, std::span<const std::uint32_t> universe,
                               Visitor&& visitor, const Budget& budget = {}) {
    struct Frame {
        std::uint32_t next; // next universe position to try at this depth
    };
    DfsStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    const bool timed = budget.max_seconds > 0;
    auto out_of_time = [&] {
        if (!timed) return false;
        const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
        return dt.count() > budget.max_seconds;
    };

    std::vector<ElementSet> closures;
    closures.emplace_back(g.order()); // depth 0: empty closure
    std::vector<std::uint32_t> chosen;
    std::vector<Frame> frames;

    auto visit = [&](std::uint32_t next_pos) {
        ++stats.nodes;
        DfsNode node{chosen, closures[chosen.size()],
                     static_cast<std::uint32_t>(chosen.size()), next_pos};
        return visitor.enter(node);
    };

    if (visit(0) == VisitAction::descend) frames.push_back({0});

    while (!frames.empty()) {
        if (stats.nodes >= budget.max_nodes || ((stats.nodes & 1023) == 0 && out_of_time())) {
            stats.truncated = true;
            break;
        }
        Frame& f = frames.back();
        if (f.next >= universe.size()) {
            // subtree done
            DfsNode node{chosen, closures[chosen.size()],
                         static_cast<std::uint32_t>(chosen.size()), f.next};
            visitor.leave(node);
            frames.pop_back();
            if (!chosen.empty()) chosen.pop_back();
            continue;
        }
        const std::uint32_t pos = f.next++;
        const std::uint32_t depth = static_cast<std::uint32_t>(chosen.size()) + 1;
        if (closures.size() <= depth) closures.emplace_back(g.order());
        closures[depth] = closures[depth - 1];
        closure_step(g, closures[depth], universe[pos]);
        chosen.push_back(pos);
        if (visit(pos + 1) == VisitAction::descend) {
            frames.push_back({pos + 1});
        } else {
            chosen.pop_back();
        }
    }
    return stats;
}

/// Visitor base with a no-op leave, for visitors that only need enter.
struct DfsVisitorBase {
    void leave(const DfsNode&) {}
};

} // namespace sumstruct
