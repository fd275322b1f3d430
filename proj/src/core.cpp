#include "balcol/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "balcol/errors.hpp"

namespace balcol {

Instance::Instance(std::vector<std::pair<Coord, Coord>> bounds, int k) : k_(k) {
    if (k < 1) throw InputError("k must be at least 1");
    intervals_.reserve(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        auto& [lo, hi] = bounds[i];
        if (hi < lo) throw InputError("interval " + std::to_string(i) + " has hi < lo");
        intervals_.push_back(Interval{i, std::move(lo), std::move(hi)});
    }
}

Instance::Instance(std::vector<Interval> intervals, int k) : intervals_(std::move(intervals)), k_(k) {
    if (k < 1) throw InputError("k must be at least 1");
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i].id != i) throw InputError("interval ids must be 0..n-1 in order");
        if (intervals_[i].hi < intervals_[i].lo)
            throw InputError("interval " + std::to_string(i) + " has hi < lo");
    }
}

Instance Instance::with_k(int k) const { return Instance(intervals_, k); }

Instance Instance::subset(std::span<const std::size_t> ids, int k) const {
    std::vector<std::pair<Coord, Coord>> bounds;
    bounds.reserve(ids.size());
    for (std::size_t id : ids) bounds.emplace_back(intervals_.at(id).lo, intervals_.at(id).hi);
    return Instance(std::move(bounds), k);
}

NormalizedInstance normalize(const Instance& instance) {
    const std::size_t n = instance.size();
    NormalizedInstance norm;
    norm.k = instance.k();
    norm.events.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        norm.events.push_back({i, EventType::Start});
        norm.events.push_back({i, EventType::End});
    }
    const auto coord_of = [&](const Event& e) -> const Coord& {
        return e.type == EventType::Start ? instance[e.interval].lo : instance[e.interval].hi;
    };
    const auto small_integer = [](const Coord& c) {
        return c.is_integer() && mpz_fits_slong_p(c.value().get_num_mpz_t()) != 0;
    };
    bool all_small = true;
    for (const Interval& iv : instance.intervals()) all_small = all_small && small_integer(iv.lo) && small_integer(iv.hi);

    if (all_small) {
        // Same order, but comparing machine integers instead of rationals.
        struct Keyed {
            long coord;
            std::uint8_t type;
            std::size_t id;
        };
        std::vector<Keyed> keyed;
        keyed.reserve(2 * n);
        for (const Event& e : norm.events)
            keyed.push_back({coord_of(e).value().get_num().get_si(), static_cast<std::uint8_t>(e.type), e.interval});
        std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
            return std::tie(a.coord, a.type, a.id) < std::tie(b.coord, b.type, b.id);
        });
        for (std::size_t r = 0; r < keyed.size(); ++r)
            norm.events[r] = {keyed[r].id, static_cast<EventType>(keyed[r].type)};
    } else {
        std::sort(norm.events.begin(), norm.events.end(), [&](const Event& a, const Event& b) {
            if (const auto c = coord_of(a) <=> coord_of(b); c != 0) return c < 0;
            if (a.type != b.type) return a.type == EventType::Start;
            return a.interval < b.interval;
        });
    }
    norm.start_rank.assign(n, 0);
    norm.end_rank.assign(n, 0);
    for (std::size_t r = 0; r < norm.events.size(); ++r) {
        const Event& e = norm.events[r];
        (e.type == EventType::Start ? norm.start_rank : norm.end_rank)[e.interval] = r + 1;
    }
    return norm;
}

SpreadTracker::SpreadTracker(int k, std::size_t max_count)
    : counts_(static_cast<std::size_t>(k), 0), freq_(max_count + 2, 0) {
    freq_[0] = k;
}

void SpreadTracker::add(int color) {
    int& c = counts_[static_cast<std::size_t>(color - 1)];
    const int v = c++;
    --freq_[static_cast<std::size_t>(v)];
    ++freq_[static_cast<std::size_t>(v + 1)];
    if (v + 1 > max_) max_ = v + 1;
    if (v == min_ && freq_[static_cast<std::size_t>(v)] == 0) min_ = v + 1;
}

void SpreadTracker::remove(int color) {
    int& c = counts_[static_cast<std::size_t>(color - 1)];
    const int v = c--;
    --freq_[static_cast<std::size_t>(v)];
    ++freq_[static_cast<std::size_t>(v - 1)];
    if (v - 1 < min_) min_ = v - 1;
    if (v == max_ && freq_[static_cast<std::size_t>(v)] == 0) max_ = v - 1;
}

void check_coloring(const Instance& instance, const Coloring& coloring) {
    if (coloring.size() != instance.size())
        throw InputError("coloring has " + std::to_string(coloring.size()) + " entries, instance has " +
                         std::to_string(instance.size()) + " intervals");
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        const int c = coloring.colors[i];
        if (c < 1 || c > instance.k())
            throw InputError("color " + std::to_string(c) + " of interval " + std::to_string(i) +
                             " outside 1.." + std::to_string(instance.k()));
    }
}

ImbalanceReport imbalance(const Instance& instance, const Coloring& coloring, bool collect_regions) {
    check_coloring(instance, coloring);
    ImbalanceReport report;
    if (collect_regions) report.per_region.emplace();
    if (instance.empty()) return report;

    const auto norm = normalize(instance);
    SpreadTracker tracker(instance.k(), instance.size());
    bool have_witness = false;
    sweep_regions(
        instance, norm, [&](std::size_t id) { tracker.add(coloring.colors[id]); },
        [&](std::size_t id) { tracker.remove(coloring.colors[id]); },
        [&](const Coord& lo, const Coord& hi, std::size_t) {
            const int s = tracker.spread();
            if (!have_witness || s > report.value) {
                report.value = s;
                report.witness = lo == hi ? lo : Coord::midpoint(lo, hi);
                have_witness = true;
            }
            if (collect_regions) report.per_region->push_back({lo, hi, tracker.counts()});
        });
    return report;
}

bool is_balanced(const Instance& instance, const Coloring& coloring) {
    return imbalance(instance, coloring).value <= 1;
}

bool divisibility_predicts_zero(const Instance& instance) {
    if (instance.empty()) return true;
    const auto norm = normalize(instance);
    const auto k = static_cast<std::size_t>(instance.k());
    bool divisible = true;
    sweep_regions(
        instance, norm, [](std::size_t) {}, [](std::size_t) {},
        [&](const Coord&, const Coord&, std::size_t depth) { divisible = divisible && depth % k == 0; });
    return divisible;
}

std::vector<std::vector<std::size_t>> point_cliques_direct(const Instance& instance) {
    std::vector<Coord> points;
    for (const auto& iv : instance.intervals()) {
        points.push_back(iv.lo);
        points.push_back(iv.hi);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t distinct = points.size();
    for (std::size_t i = 0; i + 1 < distinct; ++i) points.push_back(Coord::midpoint(points[i], points[i + 1]));

    std::set<std::vector<std::size_t>> cliques;
    for (const auto& x : points) {
        std::vector<std::size_t> members;
        for (const auto& iv : instance.intervals())
            if (iv.contains(x)) members.push_back(iv.id);
        if (!members.empty()) cliques.insert(std::move(members));
    }
    return {cliques.begin(), cliques.end()};
}

namespace {

struct OracleSearch {
    std::size_t n = 0;
    int k = 1;
    std::uint64_t space = 1;                 // k^(n-1)
    std::vector<std::uint64_t> masks;        // one bitmask per clique
    int lower_bound = 0;

    // Colors are decoded with interval 1 as the most significant digit, so
    // index order is lexicographic coloring order.
    void decode(std::uint64_t index, std::vector<int>& colors) const {
        colors[0] = 1;
        for (std::size_t i = n; i-- > 1;) {
            colors[i] = static_cast<int>(index % static_cast<std::uint64_t>(k)) + 1;
            index /= static_cast<std::uint64_t>(k);
        }
    }

    int evaluate(const std::vector<int>& colors, std::vector<int>& counts) const {
        int worst = 0;
        for (std::uint64_t mask : masks) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::uint64_t m = mask; m != 0; m &= m - 1)
                ++counts[static_cast<std::size_t>(colors[static_cast<std::size_t>(__builtin_ctzll(m))] - 1)];
            const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
            worst = std::max(worst, *hi - *lo);
        }
        return worst;
    }
};

OracleSearch prepare_oracle(const Instance& instance, std::size_t limit_n) {
    const std::size_t n = instance.size();
    if (n > limit_n)
        throw InputError("instance has " + std::to_string(n) + " intervals; exhaustive search limit is " +
                         std::to_string(limit_n));
    if (n > 63) throw InputError("exhaustive search supports at most 63 intervals");
    OracleSearch s;
    s.n = n;
    s.k = instance.k();
    for (std::size_t i = 1; i < n; ++i) {
        if (s.space > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(s.k))
            throw InputError("search space k^(n-1) too large for exhaustive search");
        s.space *= static_cast<std::uint64_t>(s.k);
    }
    for (const auto& clique : point_cliques_direct(instance)) {
        std::uint64_t mask = 0;
        for (std::size_t id : clique) mask |= std::uint64_t{1} << id;
        s.masks.push_back(mask);
        if (clique.size() % static_cast<std::size_t>(s.k) != 0) s.lower_bound = 1;
    }
    return s;
}

OracleResult finish(const OracleSearch& s, int value, std::uint64_t index) {
    OracleResult result;
    result.value = value;
    result.coloring.colors.assign(s.n, 1);
    if (s.n > 0) s.decode(index, result.coloring.colors);
    return result;
}

}  // namespace

OracleResult min_imbalance_oracle_serial(const Instance& instance, std::size_t limit_n) {
    const auto s = prepare_oracle(instance, limit_n);
    if (s.n == 0) return {};
    std::vector<int> colors(s.n), counts(static_cast<std::size_t>(s.k));
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_index = 0;
    for (std::uint64_t idx = 0; idx < s.space; ++idx) {
        s.decode(idx, colors);
        const int v = s.evaluate(colors, counts);
        if (v < best) {
            best = v;
            best_index = idx;
            if (best == s.lower_bound) break;
        }
    }
    return finish(s, best, best_index);
}

OracleResult min_imbalance_oracle(const Instance& instance, std::size_t limit_n) {
    const auto s = prepare_oracle(instance, limit_n);
    if (s.n == 0) return {};
    constexpr std::uint64_t block = std::uint64_t{1} << 14;
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_index = 0;

    for (std::uint64_t base = 0; base < s.space && best != s.lower_bound; base += block) {
        const std::uint64_t end = std::min(s.space, base + block);
#pragma omp parallel
        {
            std::vector<int> colors(s.n), counts(static_cast<std::size_t>(s.k));
            int local = std::numeric_limits<int>::max();
            std::uint64_t local_index = 0;
#pragma omp for schedule(static) nowait
            for (std::uint64_t idx = base; idx < end; ++idx) {
                s.decode(idx, colors);
                const int v = s.evaluate(colors, counts);
                if (v < local || (v == local && idx < local_index)) {
                    local = v;
                    local_index = idx;
                }
            }
#pragma omp critical(balcol_oracle_merge)
            {
                if (local < best || (local == best && local_index < best_index)) {
                    best = local;
                    best_index = local_index;
                }
            }
        }
    }
    return finish(s, best, best_index);
}

}  // namespace balcol
