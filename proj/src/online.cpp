#include "balcol/online.hpp"

#include <algorithm>
#include <cctype>

#include "balcol/errors.hpp"

namespace balcol {

void RoundRobin::reset(int k) {
    k_ = k;
    next_ = 0;
}

int RoundRobin::assign(const Interval&, std::span<const Interval>, std::span<const int>) {
    const int c = next_ + 1;
    next_ = (next_ + 1) % k_;
    return c;
}

int GreedyLeastLoaded::assign(const Interval& next, std::span<const Interval> history, std::span<const int> colors) {
    std::vector<int> load(static_cast<std::size_t>(k_), 0);
    for (std::size_t i = 0; i < history.size(); ++i)
        if (history[i].contains(next.lo)) ++load[static_cast<std::size_t>(colors[i] - 1)];
    return static_cast<int>(std::min_element(load.begin(), load.end()) - load.begin()) + 1;
}

void SeededRandom::reset(int k) {
    k_ = k;
    rng_.seed(seed_);
}

int SeededRandom::assign(const Interval&, std::span<const Interval>, std::span<const int>) {
    // Plain modulo keeps the sequence identical across standard libraries.
    return static_cast<int>(rng_() % static_cast<std::uint64_t>(k_)) + 1;
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, std::uint64_t seed) {
    if (name == "round_robin") return std::make_unique<RoundRobin>();
    if (name == "greedy" || name == "greedy_least_loaded") return std::make_unique<GreedyLeastLoaded>();
    if (name == "seeded_random" || name == "random") return std::make_unique<SeededRandom>(seed);
    if (name.rfind("fixed_", 0) == 0) {
        const std::string digits = name.substr(6);
        if (!digits.empty() && digits.size() < 6 && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            const int c = std::stoi(digits);
            if (c >= 1) return std::make_unique<FixedColor>(c);
        }
    }
    throw InputError("unknown online algorithm '" + name + "'");
}

namespace {

int checked_assign(OnlineAlgorithm& alg, int k, const Interval& next, std::span<const Interval> history,
                   std::span<const int> colors) {
    const int c = alg.assign(next, history, colors);
    if (c < 1 || c > k)
        throw InputError(alg.name() + " returned color " + std::to_string(c) + " outside 1.." + std::to_string(k));
    return c;
}

}  // namespace

OnlineRun run_online(OnlineAlgorithm& alg, const Instance& stream) {
    for (std::size_t i = 1; i < stream.size(); ++i)
        if (stream[i].lo < stream[i - 1].lo)
            throw InputError("online stream must be sorted by start point (interval " + std::to_string(i) + ")");
    alg.reset(stream.k());
    OnlineRun run;
    run.coloring.colors.reserve(stream.size());
    const auto all = std::span<const Interval>(stream.intervals());
    for (std::size_t i = 0; i < stream.size(); ++i)
        run.coloring.colors.push_back(checked_assign(alg, stream.k(), stream[i], all.first(i), run.coloring.colors));
    run.imbalance = prefix_imbalances(stream, run.coloring);
    return run;
}

std::vector<int> prefix_imbalances(const Instance& instance, const Coloring& coloring) {
    check_coloring(instance, coloring);
    const std::size_t n = instance.size();
    const auto k = static_cast<std::size_t>(instance.k());

    std::vector<Coord> grid;
    for (const Interval& iv : instance.intervals()) {
        grid.push_back(iv.lo);
        grid.push_back(iv.hi);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const std::size_t distinct = grid.size();
    for (std::size_t i = 0; i + 1 < distinct; ++i) grid.push_back(Coord::midpoint(grid[i], grid[i + 1]));
    std::sort(grid.begin(), grid.end());

    std::vector<int> counts(grid.size() * k, 0);
    std::vector<int> spread(grid.size(), 0);
    std::vector<std::size_t> hist(n + 1, 0);  // number of grid points per spread value
    hist[0] = grid.size();
    std::size_t top = 0;

    std::vector<int> result;
    result.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto from = static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), instance[i].lo) - grid.begin());
        const auto to = static_cast<std::size_t>(std::upper_bound(grid.begin(), grid.end(), instance[i].hi) - grid.begin());
        const auto color = static_cast<std::size_t>(coloring.colors[i] - 1);
        for (std::size_t p = from; p < to; ++p) {
            int* row = counts.data() + p * k;
            ++row[color];
            const auto [lo, hi] = std::minmax_element(row, row + k);
            const auto s = static_cast<std::size_t>(*hi - *lo);
            --hist[static_cast<std::size_t>(spread[p])];
            ++hist[s];
            spread[p] = static_cast<int>(s);
            top = std::max(top, s);
        }
        while (top > 0 && hist[top] == 0) --top;
        result.push_back(static_cast<int>(top));
    }
    return result;
}

Instance Transcript::instance() const {
    std::vector<std::pair<Coord, Coord>> bounds;
    bounds.reserve(steps.size());
    for (const auto& s : steps) bounds.emplace_back(s.lo, s.hi);
    return Instance(std::move(bounds), k);
}

Coloring Transcript::coloring() const {
    Coloring c;
    c.colors.reserve(steps.size());
    for (const auto& s : steps) c.colors.push_back(s.color);
    return c;
}

namespace {

struct Adversary {
    OnlineAlgorithm& alg;
    int k;
    Transcript out;
    std::vector<Interval> history;
    std::vector<int> colors;

    int signed_imbalance(const std::pair<Coord, Coord>& region) const {
        const Coord x = Coord::midpoint(region.first, region.second);
        int total = 0;
        for (std::size_t i = 0; i < history.size(); ++i) {
            if (!history[i].contains(x)) continue;
            if (colors[i] == 1) ++total;
            if (colors[i] == 2) --total;
        }
        return total;
    }

    int present(const Coord& lo, const Coord& hi) {
        const Interval next{history.size(), lo, hi};
        const int c = checked_assign(alg, k, next, history, colors);
        history.push_back(next);
        colors.push_back(c);
        out.steps.push_back({lo, hi, c, c == 1 || c == 2, 0, 0, 0});
        return c;
    }

    void record_state() {
        out.steps.back().simb_left = signed_imbalance(out.left);
        out.steps.back().simb_right = signed_imbalance(out.right);
    }

    void finish() {
        const auto prefix = prefix_imbalances(out.instance(), out.coloring());
        for (std::size_t i = 0; i < prefix.size(); ++i) out.steps[i].imbalance = prefix[i];
    }
};

}  // namespace

Transcript adversary_k2(OnlineAlgorithm& alg, int rounds) {
    return adversary_general(alg, 2, rounds, 0);
}

Transcript adversary_general(OnlineAlgorithm& alg, int k, int rounds, std::optional<int> repeat_budget) {
    if (k < 2) throw InputError("the adversary needs k >= 2");
    if (rounds < 1) throw InputError("rounds must be at least 1");
    const int budget = repeat_budget.value_or(2 * rounds);
    if (budget < 0) throw InputError("repeat budget must be non-negative");

    alg.reset(k);
    Adversary adv{alg, k, {}, {}, {}};
    adv.out.k = k;
    adv.out.left = {Coord(0), Coord(1)};
    adv.out.right = {Coord(2), Coord(3)};
    auto& L = adv.out.left;
    auto& R = adv.out.right;

    for (int round = 0; round < rounds; ++round) {
        const Coord mid_left = Coord::midpoint(L.first, L.second);
        const Coord mid_right = Coord::midpoint(R.first, R.second);
        // Retries start strictly inside (mid_left, midpoint of [mid_left, L.hi]).
        const Coord gap = (L.second - mid_left) / Coord(2);
        Coord start = mid_left;
        Coord step = gap / Coord(2);
        int c = adv.present(start, mid_right);
        int tries = 0;
        while (c != 1 && c != 2) {
            if (tries == budget) {
                adv.out.stalled = true;
                adv.record_state();
                adv.finish();
                return std::move(adv.out);
            }
            adv.record_state();
            ++tries;
            start = start + step;
            step = step / Coord(2);
            c = adv.present(start, mid_right);
        }
        ++adv.out.rounds;
        if (c == 1) {
            ++adv.out.plus;
            R = {R.first, mid_right};
        } else {
            ++adv.out.minus;
            R = {mid_right, R.second};
        }
        L = {start, L.second};
        adv.record_state();
    }
    adv.finish();
    return std::move(adv.out);
}

}  // namespace balcol
