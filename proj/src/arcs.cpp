#include "balcol/arcs.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "balcol/errors.hpp"
#include "balcol/k_color.hpp"

namespace balcol {

ArcInstance::ArcInstance(std::vector<std::pair<Coord, Coord>> start_length, Coord circumference, int k)
    : circumference_(std::move(circumference)), k_(k) {
    if (k < 1) throw InputError("k must be at least 1");
    if (circumference_ <= Coord(0)) throw InputError("circumference must be positive");
    arcs_.reserve(start_length.size());
    for (std::size_t i = 0; i < start_length.size(); ++i) {
        auto& [s, len] = start_length[i];
        if (s < Coord(0) || s >= circumference_)
            throw InputError("arc " + std::to_string(i) + " start outside [0, circumference)");
        if (len <= Coord(0)) throw InputError("arc " + std::to_string(i) + " has non-positive length");
        arcs_.push_back(Arc{i, std::move(s), std::move(len)});
    }
}

bool ArcInstance::contains(const Arc& arc, const Coord& p) const {
    if (is_full(arc)) return true;
    Coord offset = p - arc.start;
    if (offset < Coord(0)) offset = offset + circumference_;
    return offset <= arc.length;
}

Unfolding unfold(const ArcInstance& arcs, FullArcMapping mapping) {
    const Coord& c = arcs.circumference();
    std::vector<std::pair<Coord, Coord>> bounds(arcs.size());
    std::vector<std::size_t> full;
    for (const Arc& arc : arcs.arcs()) {
        auto& [lo, hi] = bounds[arc.id];
        const Coord end = arc.start + arc.length;
        if (arcs.is_full(arc)) {
            full.push_back(arc.id);
        } else if (end < c || (mapping == FullArcMapping::SpanHull && end == c)) {
            lo = arc.start;
            hi = end;
        } else {
            lo = arc.start - c;
            hi = end - c;
        }
    }

    if (!full.empty()) {
        Coord lo(0), hi = c;
        if (mapping == FullArcMapping::SpanHull) {
            std::vector<Coord> ends;
            for (const Arc& arc : arcs.arcs()) {
                if (arcs.is_full(arc)) continue;
                ends.push_back(bounds[arc.id].first);
                ends.push_back(bounds[arc.id].second);
            }
            std::sort(ends.begin(), ends.end());
            ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
            Coord margin(1);
            if (ends.size() >= 2) {
                Coord gap = ends[1] - ends[0];
                for (std::size_t i = 2; i < ends.size(); ++i) gap = std::min(gap, ends[i] - ends[i - 1]);
                margin = gap / Coord(2);
                lo = ends.front() - margin;
                hi = ends.back() + margin;
            } else {
                lo = Coord(0) - margin;
                hi = c + margin;
            }
        }
        for (std::size_t id : full) bounds[id] = {lo, hi};
    }

    Unfolding result{Instance(std::move(bounds), arcs.k()), {}};
    result.arc_of.resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) result.arc_of[i] = i;
    return result;
}

namespace {

// Arc endpoints on the circle plus midpoints of every gap, wrap gap included.
std::vector<Coord> circle_sample_points(const ArcInstance& arcs) {
    const Coord& c = arcs.circumference();
    std::vector<Coord> ends;
    for (const Arc& arc : arcs.arcs()) {
        if (arcs.is_full(arc)) continue;
        ends.push_back(arc.start);
        Coord e = arc.start + arc.length;
        if (e >= c) e = e - c;
        ends.push_back(e);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    if (ends.empty()) return {Coord(0)};

    std::vector<Coord> points = ends;
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) points.push_back(Coord::midpoint(ends[i], ends[i + 1]));
    Coord wrap = Coord::midpoint(ends.back(), ends.front() + c);
    if (wrap >= c) wrap = wrap - c;
    points.push_back(wrap);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace

ImbalanceReport arc_imbalance(const ArcInstance& arcs, const Coloring& coloring) {
    if (coloring.size() != arcs.size())
        throw InputError("coloring has " + std::to_string(coloring.size()) + " entries, instance has " +
                         std::to_string(arcs.size()) + " arcs");
    const auto k = static_cast<std::size_t>(arcs.k());
    for (int col : coloring.colors)
        if (col < 1 || col > arcs.k()) throw InputError("color outside 1.." + std::to_string(arcs.k()));

    ImbalanceReport report;
    if (arcs.size() == 0) return report;

    const Coord& c = arcs.circumference();
    const auto points = circle_sample_points(arcs);
    const std::size_t g = points.size();
    std::vector<int> diff((g + 1) * k, 0);
    const auto lower = [&](const Coord& x) {
        return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) - points.begin());
    };
    const auto upper = [&](const Coord& x) {
        return static_cast<std::size_t>(std::upper_bound(points.begin(), points.end(), x) - points.begin());
    };
    const auto cover = [&](std::size_t from, std::size_t to, std::size_t color) {
        if (from >= to) return;
        diff[from * k + color] += 1;
        diff[to * k + color] -= 1;
    };

    for (const Arc& arc : arcs.arcs()) {
        const auto color = static_cast<std::size_t>(coloring.colors[arc.id] - 1);
        if (arcs.is_full(arc)) {
            cover(0, g, color);
            continue;
        }
        const Coord end = arc.start + arc.length;
        if (end < c) {
            cover(lower(arc.start), upper(end), color);
        } else {
            cover(lower(arc.start), g, color);
            cover(0, upper(end - c), color);
        }
    }

    std::vector<int> counts(k, 0);
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t col = 0; col < k; ++col) counts[col] += diff[i * k + col];
        const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        if (i == 0 || *hi - *lo > report.value) {
            report.value = *hi - *lo;
            report.witness = points[i];
        }
    }
    return report;
}

Coloring arc_color(const ArcInstance& arcs, FullArcMapping mapping) {
    const auto unfolded = unfold(arcs, mapping);
    const auto line = k_color(unfolded.instance);
    Coloring coloring;
    coloring.colors.assign(arcs.size(), 1);
    for (std::size_t i = 0; i < unfolded.arc_of.size(); ++i) coloring.colors[unfolded.arc_of[i]] = line.colors[i];
    return coloring;
}

OracleResult min_arc_imbalance_oracle(const ArcInstance& arcs, std::size_t limit_n) {
    const std::size_t n = arcs.size();
    if (n > limit_n || n > 63) throw InputError("too many arcs for exhaustive search");
    if (n == 0) return {};

    std::set<std::uint64_t> distinct;
    for (const Coord& p : circle_sample_points(arcs)) {
        std::uint64_t mask = 0;
        for (const Arc& arc : arcs.arcs())
            if (arcs.contains(arc, p)) mask |= std::uint64_t{1} << arc.id;
        if (mask != 0) distinct.insert(mask);
    }
    const std::vector<std::uint64_t> masks(distinct.begin(), distinct.end());

    const auto k = static_cast<std::uint64_t>(arcs.k());
    std::uint64_t space = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (space > (std::uint64_t{1} << 36) / k) throw InputError("search space too large");
        space *= k;
    }

    std::vector<int> colors(n, 1), counts(k);
    int best = std::numeric_limits<int>::max();
    std::vector<int> best_colors;
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = n; i-- > 1;) {
            colors[i] = static_cast<int>(rest % k) + 1;
            rest /= k;
        }
        int worst = 0;
        for (std::uint64_t mask : masks) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::uint64_t m = mask; m != 0; m &= m - 1)
                ++counts[static_cast<std::size_t>(colors[static_cast<std::size_t>(__builtin_ctzll(m))] - 1)];
            const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
            worst = std::max(worst, *hi - *lo);
            if (worst >= best) break;
        }
        if (worst < best) {
            best = worst;
            best_colors = colors;
        }
    }
    return {best, Coloring{best_colors}};
}

}  // namespace balcol
