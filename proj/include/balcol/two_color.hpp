#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "balcol/core.hpp"
#include "balcol/union_find.hpp"

namespace balcol {

/// Which endpoint type a constraint is built from: starts (⊢) or ends (⊣).
enum class Side : std::uint8_t { Start, End };

struct RankedEvent {
    std::size_t rank = 0;  // 1..2n
    std::size_t interval = 0;
    EventType type = EventType::Start;

    friend bool operator==(const RankedEvent&, const RankedEvent&) = default;
};

/// Events of rank 2i-1 and 2i; they enclose an odd-depth rank region.
struct EventPair {
    RankedEvent first;
    RankedEvent second;
};

struct ConstraintEdge2 {
    std::size_t a = 0;  // chain indices
    std::size_t b = 0;
    Side side = Side::Start;
    std::size_t pair_index = 0;  // source pair
};

/// Vertices are chains (intervals merged by start/end substitution);
/// chain indices are ordered by the smallest interval id in each chain.
struct ConstraintGraph2 {
    std::size_t num_chains = 0;
    std::vector<std::size_t> chain_of;         // interval id -> chain index
    std::vector<std::size_t> chain_min_id;     // chain index -> smallest member id
    std::vector<ConstraintEdge2> edges;
};

std::vector<EventPair> pair_events(const NormalizedInstance& norm);

std::pair<UnionFind, ConstraintGraph2> build_constraint_graph(const std::vector<EventPair>& pairs);

/// Balanced 2-coloring in O(n log n). Requires instance.k() == 2.
Coloring two_color(const Instance& instance);

}  // namespace balcol
