#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "balcol/coord.hpp"

namespace balcol {

/// Closed interval [lo, hi]; point intervals (lo == hi) are allowed.
struct Interval {
    std::size_t id = 0;
    Coord lo;
    Coord hi;

    bool contains(const Coord& x) const { return lo <= x && x <= hi; }
};

/// A set of intervals to be colored with colors 1..k.
class Instance {
public:
    Instance() = default;
    /// Ids are assigned 0..n-1 in the given order.
    Instance(std::vector<std::pair<Coord, Coord>> bounds, int k);
    /// Throws InputError unless ids are exactly 0..n-1 and lo <= hi everywhere.
    Instance(std::vector<Interval> intervals, int k);
    Instance(std::initializer_list<std::pair<Coord, Coord>> bounds, int k)
        : Instance(std::vector<std::pair<Coord, Coord>>(bounds), k) {}

    const std::vector<Interval>& intervals() const { return intervals_; }
    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }
    int k() const { return k_; }

    Instance with_k(int k) const;
    /// Sub-instance over the given ids (renumbered 0..m-1 in the given order).
    Instance subset(std::span<const std::size_t> ids, int k) const;

private:
    std::vector<Interval> intervals_;
    int k_ = 1;
};

struct Coloring {
    std::vector<int> colors;  // 1..k, aligned with Instance order

    std::size_t size() const { return colors.size(); }
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class EventType : std::uint8_t { Start, End };

struct Event {
    std::size_t interval = 0;
    EventType type = EventType::Start;

    friend bool operator==(const Event&, const Event&) = default;
};

/// Symbolic perturbation: all 2n endpoints in a strict total order.
/// Ties on coordinate put every start before every end, then order by id.
struct NormalizedInstance {
    std::vector<Event> events;             // events[r - 1] has rank r
    std::vector<std::size_t> start_rank;   // 1..2n
    std::vector<std::size_t> end_rank;     // 1..2n
    int k = 1;

    std::size_t size() const { return start_rank.size(); }
};

NormalizedInstance normalize(const Instance& instance);

/// Per-color counts over a point or open region.
struct RegionCounts {
    Coord lo;
    Coord hi;           // lo == hi for a single point
    std::vector<int> counts;
};

struct ImbalanceReport {
    int value = 0;
    Coord witness;      // a point where `value` is attained
    std::optional<std::vector<RegionCounts>> per_region;
};

/// Tracks max - min over k counters under +-1 updates in O(1).
class SpreadTracker {
public:
    explicit SpreadTracker(int k, std::size_t max_count);

    void add(int color);     // color is 1-based
    void remove(int color);
    int spread() const { return max_ - min_; }
    int count(int color) const { return counts_[static_cast<std::size_t>(color - 1)]; }
    const std::vector<int>& counts() const { return counts_; }

private:
    std::vector<int> counts_;
    std::vector<int> freq_;
    int max_ = 0;
    int min_ = 0;
};

/// Walks every distinct point clique of the closed intervals: each distinct
/// endpoint x (after all starts at x, before the ends at x) and each open gap
/// between consecutive distinct endpoints. `on_add(id)` / `on_remove(id)` fire
/// as intervals enter and leave; `on_region(lo, hi, depth)` fires per clique
/// with lo == hi for points. Gaps covered by no interval are skipped.
template <typename OnAdd, typename OnRemove, typename OnRegion>
void sweep_regions(const Instance& instance, const NormalizedInstance& norm, OnAdd&& on_add,
                   OnRemove&& on_remove, OnRegion&& on_region);

/// Throws InputError when the coloring length or a color is out of range.
void check_coloring(const Instance& instance, const Coloring& coloring);

/// Maximum over all x of (max color count - min color count) at x, counting
/// colors that do not occur as zero.
ImbalanceReport imbalance(const Instance& instance, const Coloring& coloring,
                          bool collect_regions = false);

bool is_balanced(const Instance& instance, const Coloring& coloring);

/// True iff every point clique has size divisible by k, i.e. the minimum
/// imbalance is 0 rather than 1.
bool divisibility_predicts_zero(const Instance& instance);

struct OracleResult {
    int value = 0;
    Coloring coloring;
};

/// Exhaustive minimum-imbalance search. The first interval is pinned to
/// color 1; among minimizers the lexicographically smallest coloring wins.
/// Parallel over the search space; result identical to the serial variant.
OracleResult min_imbalance_oracle(const Instance& instance, std::size_t limit_n = 12);
OracleResult min_imbalance_oracle_serial(const Instance& instance, std::size_t limit_n = 12);

/// Distinct sets {i : lo_i <= x <= hi_i} for x over endpoints and midpoints,
/// computed by direct counting (no sweep). Sorted id lists, deduplicated.
std::vector<std::vector<std::size_t>> point_cliques_direct(const Instance& instance);

// ---------------------------------------------------------------------------

template <typename OnAdd, typename OnRemove, typename OnRegion>
void sweep_regions(const Instance& instance, const NormalizedInstance& norm, OnAdd&& on_add,
                   OnRemove&& on_remove, OnRegion&& on_region) {
    const auto& events = norm.events;
    const auto coord_of = [&](const Event& e) -> const Coord& {
        return e.type == EventType::Start ? instance[e.interval].lo : instance[e.interval].hi;
    };

    std::size_t depth = 0;
    std::size_t r = 0;
    while (r < events.size()) {
        const Coord& x = coord_of(events[r]);
        while (r < events.size() && events[r].type == EventType::Start && coord_of(events[r]) == x) {
            on_add(events[r].interval);
            ++depth;
            ++r;
        }
        on_region(x, x, depth);
        while (r < events.size() && events[r].type == EventType::End && coord_of(events[r]) == x) {
            on_remove(events[r].interval);
            --depth;
            ++r;
        }
        if (r < events.size() && depth > 0) on_region(x, coord_of(events[r]), depth);
    }
}

}  // namespace balcol
