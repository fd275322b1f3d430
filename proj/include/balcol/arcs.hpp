#pragma once

#include <cstddef>
#include <vector>

#include "balcol/core.hpp"

namespace balcol {

/// Closed arc starting at `start` and running counterclockwise for `length`.
/// length >= circumference covers the whole circle.
struct Arc {
    std::size_t id = 0;
    Coord start;
    Coord length;
};

class ArcInstance {
public:
    /// Throws InputError unless circumference > 0, 0 <= start < circumference
    /// and length > 0 for every arc. Ids are assigned 0..n-1.
    ArcInstance(std::vector<std::pair<Coord, Coord>> start_length, Coord circumference, int k);

    const std::vector<Arc>& arcs() const { return arcs_; }
    const Coord& circumference() const { return circumference_; }
    int k() const { return k_; }
    std::size_t size() const { return arcs_.size(); }

    bool is_full(const Arc& arc) const { return arc.length >= circumference_; }
    /// Closed-arc membership of a circle point p in [0, circumference).
    bool contains(const Arc& arc, const Coord& p) const;

private:
    std::vector<Arc> arcs_;
    Coord circumference_;
    int k_ = 1;
};

/// How arcs covering the whole circle are placed on the line.
enum class FullArcMapping {
    /// [0, C]. Together with wrapping arcs that end exactly at C this makes
    /// every circle point correspond to at most two line points whose cliques
    /// partition the arcs covering it, which is what the bound of 2 needs.
    Period,
    /// One interval spanning the hull of all other intervals plus a margin of
    /// half the smallest gap; arcs ending exactly at C map to [s, C]. Kept for
    /// comparison: it double-counts full arcs and can reach imbalance 3.
    SpanHull,
};

struct Unfolding {
    Instance instance;                    // interval i is the image of arc i
    std::vector<std::size_t> arc_of;
};

Unfolding unfold(const ArcInstance& arcs, FullArcMapping mapping = FullArcMapping::Period);

/// Max over circle points of the color-count spread (wrap-aware sweep over
/// arc endpoints and the midpoints between them).
ImbalanceReport arc_imbalance(const ArcInstance& arcs, const Coloring& coloring);

/// Unfold, k-color the line instance, pull colors back. Imbalance <= 2.
Coloring arc_color(const ArcInstance& arcs, FullArcMapping mapping = FullArcMapping::Period);

/// Exhaustive minimum arc imbalance (first arc pinned to color 1,
/// lexicographically smallest minimizer).
OracleResult min_arc_imbalance_oracle(const ArcInstance& arcs, std::size_t limit_n = 12);

}  // namespace balcol
