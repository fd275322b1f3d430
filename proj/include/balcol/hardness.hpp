#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balcol/core.hpp"

namespace balcol {

/// Positive NAE-3SAT: every clause needs both truth values among its three
/// variables. Variables are 1-based; repeats inside a clause are allowed.
struct NaeFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
    /// Throws InputError on a variable outside 1..num_vars.
    void validate() const;
};

bool nae_satisfies(const NaeFormula& formula, const std::vector<bool>& assignment);

/// Exhaustive search. assignment[v - 1] is the value of variable v; the
/// witness is the first satisfying assignment in binary counting order with
/// variable 1 as the lowest bit. Parallel over the search space.
std::optional<std::vector<bool>> nae_brute_force(const NaeFormula& formula);
std::optional<std::vector<bool>> nae_brute_force_serial(const NaeFormula& formula);

enum class BoxTag : std::uint8_t { Clause, Variable, Chain, Crossing, Cover, Plain };
std::string to_string(BoxTag tag);

/// Closed axis-parallel box, one [lo, hi] per dimension.
struct Box {
    std::size_t id = 0;
    std::vector<std::pair<Coord, Coord>> extent;
    BoxTag tag = BoxTag::Plain;
    std::string origin;  // which formula element produced the box
    bool intersects(const Box& other) const;
};

struct BoxInstance {
    std::size_t d = 2;
    int k = 2;
    std::vector<Box> boxes;
    /// Pairs (i < j) that the construction means to intersect. Empty for
    /// instances that do not come from a reduction.
    std::vector<std::pair<std::size_t, std::size_t>> expected_pairs;
    /// Per clause, the ids of its three rectangles.
    std::vector<std::array<std::size_t, 3>> clause_boxes;
    /// Per variable (index v - 1), the variable rectangle.
    std::vector<std::size_t> variable_boxes;
    std::vector<std::size_t> cover_boxes;

    std::size_t size() const { return boxes.size(); }
    /// Throws InputError on wrong dimension count, lo > hi or bad ids.
    void validate() const;
};

/// Variables sit in a top row and clause gadgets in a bottom row; every
/// (clause, slot) gets its own chain of rectangles routed down, across and
/// down again on integer tracks. Chains cut at every crossing and have an odd
/// number of links. For k > 2, k - 2 nested cover rectangles enclose the
/// construction and share a region right of it.
BoxInstance reduce_nae_to_boxes(const NaeFormula& formula, int k);

/// Adds dimensions of zero extent ([0, 0]) until there are d of them.
BoxInstance lift_boxes(const BoxInstance& instance, std::size_t d);

/// Distinct nonempty sets S(x) = {boxes containing x}, found over the grid of
/// per-dimension endpoints and midpoints. Sorted, each set sorted.
std::vector<std::vector<std::size_t>> box_cells(const BoxInstance& instance);

/// Maximum color-count spread over all cells, with a cell attaining it.
struct BoxImbalance {
    int value = 0;
    std::vector<std::size_t> worst_cell;
};
BoxImbalance box_imbalance(const BoxInstance& instance, const Coloring& coloring);

struct AuditReport {
    bool ok = true;
    std::vector<std::string> problems;
};
/// Compares all intersecting pairs with `expected_pairs` and checks that each
/// clause's three rectangles meet in exactly one distinct cell.
AuditReport audit_reduction(const BoxInstance& instance);

/// Backtracking over boxes in id order, colors ascending, box 0 fixed to
/// color 1. A branch dies as soon as some cell can no longer end up balanced.
/// Throws InputError above `max_boxes` boxes or after `node_limit` nodes.
std::optional<Coloring> decide_balanced_boxes(const BoxInstance& instance, std::size_t max_boxes = 512,
                                              std::uint64_t node_limit = 50'000'000);

std::string boxes_to_svg(const BoxInstance& instance, const std::optional<Coloring>& coloring = std::nullopt);

struct WeightedInstance {
    Instance instance;
    std::vector<std::int64_t> weights;
};

/// n identical intervals [0, 1] with the given weights, k = 2.
WeightedInstance reduce_partition_to_weighted(const std::vector<std::int64_t>& values);
/// max over x and colors i, j of |w_i(x) - w_j(x)|.
std::int64_t weighted_imbalance(const WeightedInstance& weighted, const Coloring& coloring);
/// Exhaustive minimum (first interval pinned to color 1); n <= 24.
std::int64_t min_weighted_imbalance(const WeightedInstance& weighted);

struct GroupedInstance {
    Instance instance;
    std::vector<std::vector<std::size_t>> groups;  // interval ids that must share a color
    std::vector<int> group_variable;               // variable behind each group
};

/// Clause i becomes three copies of [3i, 3i + 1]; one group per variable that
/// occurs, in variable order, k = 2.
GroupedInstance reduce_nae_to_multiple_intervals(const NaeFormula& formula);
/// Exhaustive search over one color per group; returns a balanced coloring of
/// the intervals if one exists. At most 24 groups.
std::optional<Coloring> decide_grouped(const GroupedInstance& grouped);

}  // namespace balcol
