// One PASS/FAIL line per acceptance criterion. Criteria listed with
// --expect-fail still print their real verdict; they only stop counting
// toward the exit status.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balcol/arcs.hpp"
#include "balcol/errors.hpp"
#include "balcol/hardness.hpp"
#include "balcol/k_color.hpp"
#include "balcol/online.hpp"
#include "balcol/two_color.hpp"
#include "test_support.hpp"

using namespace balcol;
namespace ts = testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x, int digits = 2) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(digits);
    s << x;
    return s.str();
}

Verdict balancedness() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    int bad_two = 0, bad_k = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng() % 201;
        const int k = 1 + static_cast<int>(rng() % 16);
        const auto inst = ts::random_instance(rng, n, k, 0.3);
        if (ts::naive_imbalance(inst, k_color(inst).colors) > 1) ++bad_k;
        const auto two = inst.with_k(2);
        if (ts::naive_imbalance(two, two_color(two).colors) > 1) ++bad_two;
    }
    const double secs = seconds_since(t0);
    return {bad_two == 0 && bad_k == 0 && secs < 60,
            "1000 instances, unbalanced: two_color " + std::to_string(bad_two) + ", k_color " + std::to_string(bad_k) +
                ", " + fmt(secs) + " s"};
}

Verdict optimality() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2002);
    int mismatch = 0, zero_mismatch = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 2);
        const auto inst = ts::random_instance(rng, rng() % 10, k, 0.3, 10);
        const int best = min_imbalance_oracle(inst).value;
        const int got = imbalance(inst, k_color(inst)).value;
        if (got != best) ++mismatch;
        if (k == 2 && imbalance(inst, two_color(inst)).value != best) ++mismatch;
        if ((best == 0) != divisibility_predicts_zero(inst)) ++zero_mismatch;
    }
    const double secs = seconds_since(t0);
    return {mismatch == 0 && zero_mismatch == 0 && secs < 60,
            "300 instances, value mismatches " + std::to_string(mismatch) + ", divisibility mismatches " +
                std::to_string(zero_mismatch) + ", " + fmt(secs) + " s"};
}

// Starts uniform in [0, 10n), lengths uniform in [0, 1000]: mean depth stays
// near 50 whatever n is.
Instance constant_depth(std::size_t n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> start(0, 10 * static_cast<std::int64_t>(n) - 1);
    std::uniform_int_distribution<std::int64_t> len(0, 1000);
    std::vector<std::pair<Coord, Coord>> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = start(rng);
        b.emplace_back(s, s + len(rng));
    }
    return Instance(std::move(b), k);
}

double median_time(const Instance& inst, int reps) {
    std::vector<double> t;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        const auto c = k_color(inst);
        t.push_back(seconds_since(t0));
        if (c.size() != inst.size()) throw InternalError("wrong coloring size");
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

Verdict complexity() {
    const auto small = constant_depth(100'000, 8, 3003);
    const auto large = constant_depth(200'000, 8, 3004);
    const double a = median_time(small, 3);
    const double b = median_time(large, 3);
    const bool balanced = imbalance(small, k_color(small)).value <= 1;
    const double ratio = b / a;
    return {balanced && a < 10 && ratio < 2.5,
            "n=1e5 k=8: " + fmt(a, 3) + " s, n=2e5: " + fmt(b, 3) + " s, ratio " + fmt(ratio) + " (median of 3)"};
}

Verdict dewerra_bound() {
    std::mt19937_64 rng(4004);
    int over = 0, unbalanced = 0, aborted = 0, worst_excess = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 7);
        const auto inst = ts::random_instance(rng, rng() % 201, k, 0.3);
        try {
            const auto r = k_color_dewerra(inst);
            const int bound = k * (k - 1) / 2;
            if (r.recolorings > bound) {
                ++over;
                worst_excess = std::max(worst_excess, r.recolorings - bound);
            }
            if (imbalance(inst, r.coloring).value > 1) ++unbalanced;
        } catch (const InternalError&) {
            ++aborted;
        }
    }
    return {over == 0 && unbalanced == 0 && aborted == 0,
            "200 instances, over k(k-1)/2 passes: " + std::to_string(over) + " (worst +" +
                std::to_string(worst_excess) + "), unbalanced " + std::to_string(unbalanced) + ", aborted " +
                std::to_string(aborted)};
}

Verdict edge_coloring() {
    std::mt19937_64 rng(5005);
    int bad = 0;
    std::size_t largest = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int delta = 1 + static_cast<int>(rng() % 8);
        const auto g = ts::random_bipartite(rng, 50 + rng() % 2000, 1 + rng() % 10'000, delta);
        const int d = static_cast<int>(g.max_degree());
        largest = std::max(largest, g.edges.size());
        if (g.edges.empty()) continue;
        if (!ts::proper_edge_coloring(g, edge_color(g, d), d)) ++bad;
    }
    return {bad == 0, "100 graphs (up to " + std::to_string(largest) + " edges), improper " + std::to_string(bad)};
}

Verdict arcs() {
    std::mt19937_64 rng(6006);
    int over = 0, worst = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 7);
        const std::size_t n = rng() % 101;
        std::uniform_int_distribution<int> start(0, 59), len(1, 80);
        std::vector<std::pair<Coord, Coord>> list;
        for (std::size_t i = 0; i < n; ++i) list.emplace_back(Coord(start(rng), 2), Coord(len(rng), 2));
        const ArcInstance a(std::move(list), Coord(30), k);
        const int v = arc_imbalance(a, arc_color(a)).value;
        worst = std::max(worst, v);
        if (v > 2) ++over;
    }
    const ArcInstance tri({{Coord(0), Coord(3, 2)}, {Coord(1), Coord(3, 2)}, {Coord(2), Coord(3, 2)}}, Coord(3), 2);
    const int oracle = min_arc_imbalance_oracle(tri).value;
    const int algo = arc_imbalance(tri, arc_color(tri)).value;
    return {over == 0 && oracle == 2 && algo == 2,
            "500 instances, worst " + std::to_string(worst) + "; three arcs: oracle " + std::to_string(oracle) +
                ", algorithm " + std::to_string(algo)};
}

Verdict online() {
    std::vector<std::unique_ptr<OnlineAlgorithm>> algs;
    algs.push_back(make_algorithm("round_robin"));
    algs.push_back(make_algorithm("greedy_least_loaded"));
    for (std::uint64_t seed : {11, 22, 33}) algs.push_back(make_algorithm("seeded_random", seed));
    bool ok = true;
    std::string detail = "t=60:";
    for (auto& alg : algs) {
        const auto t = adversary_k2(*alg, 60);
        const int online_value = t.final_imbalance();
        const int offline = imbalance(t.instance(), k_color(t.instance())).value;
        ok = ok && online_value >= 20 && offline <= 1;
        detail += " " + alg->name() + " " + std::to_string(online_value) + "/" + std::to_string(offline);
    }
    return {ok, detail + " (online/offline)"};
}

std::vector<NaeFormula> nae_corpus() {
    std::mt19937_64 rng(8008);
    std::vector<NaeFormula> corpus;
    for (int i = 0; i < 50; ++i) corpus.push_back(ts::random_formula(rng, 3, 5));
    corpus.push_back(NaeFormula{3, {{1, 2, 3}}});
    corpus.push_back(NaeFormula{1, {{1, 1, 1}}});
    return corpus;
}

Verdict hardness() {
    const auto t0 = Clock::now();
    int agree2 = 0, total2 = 0, agree3 = 0, total3 = 0, audit_fail = 0;
    for (const auto& f : nae_corpus()) {
        const bool sat = nae_brute_force(f).has_value();
        const auto inst = reduce_nae_to_boxes(f, 2);
        if (!audit_reduction(inst).ok) ++audit_fail;
        ++total2;
        if (decide_balanced_boxes(inst).has_value() == sat) ++agree2;
        if (f.clauses.size() <= 2) {
            const auto inst3 = reduce_nae_to_boxes(f, 3);
            if (!audit_reduction(inst3).ok) ++audit_fail;
            ++total3;
            if (decide_balanced_boxes(inst3).has_value() == sat) ++agree3;
        }
    }
    const double secs = seconds_since(t0);
    return {agree2 == total2 && agree3 == total3 && audit_fail == 0 && secs < 300,
            "k=2 " + std::to_string(agree2) + "/" + std::to_string(total2) + ", k=3 " + std::to_string(agree3) + "/" +
                std::to_string(total3) + ", audit failures " + std::to_string(audit_fail) + ", " + fmt(secs) + " s"};
}

Verdict c1p() {
    std::mt19937_64 rng(9009);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = ts::random_c1p(rng, 1 + rng() % 50, 1 + rng() % 50);
        const int k = 1 + static_cast<int>(rng() % 5);
        const auto c = k_color(hypergraph_to_instance(m, k));
        if (ts::naive_column_spread(m, c.colors, k) > 1) ++bad;
    }
    bool rejected = false;
    try {
        hypergraph_to_instance(BinaryMatrix{2, 3, {1, 1, 0, 1, 0, 1}}, 2);
    } catch (const InputError& e) {
        rejected = std::string(e.what()).find("row 2 does not have consecutive ones") != std::string::npos;
    }
    return {bad == 0 && rejected,
            "100 matrices, spread above 1: " + std::to_string(bad) + "; gapped row rejected: " + (rejected ? "yes" : "no")};
}

Verdict reductions() {
    const auto a = reduce_partition_to_weighted({1, 1, 2});
    bool zero = false;
    for (int mask = 0; mask < 8; ++mask) {
        Coloring c{{1 + (mask & 1), 1 + ((mask >> 1) & 1), 1 + ((mask >> 2) & 1)}};
        zero = zero || weighted_imbalance(a, c) == 0;
    }
    const auto b = reduce_partition_to_weighted({1, 2});
    int min_b = 1 << 30;
    for (int mask = 0; mask < 4; ++mask) min_b = std::min<int>(min_b, static_cast<int>(weighted_imbalance(b, Coloring{{1 + (mask & 1), 1 + ((mask >> 1) & 1)}})));
    int agree = 0, total = 0;
    for (const auto& f : nae_corpus()) {
        ++total;
        if (decide_grouped(reduce_nae_to_multiple_intervals(f)).has_value() == nae_brute_force(f).has_value()) ++agree;
    }
    return {zero && min_b == 1 && agree == total,
            std::string("{1,1,2} reaches 0: ") + (zero ? "yes" : "no") + ", {1,2} minimum " + std::to_string(min_b) +
                ", grouped agreement " + std::to_string(agree) + "/" + std::to_string(total)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expect_fail;
    std::vector<int> only;
    app.add_option("--expect-fail", expect_fail, "criteria known not to hold");
    app.add_option("--only", only, "run just these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"balancedness", balancedness}, {"optimality", optimality}, {"complexity", complexity},
        {"dewerra-bound", dewerra_bound}, {"edge-coloring", edge_coloring}, {"arcs", arcs},
        {"online", online}, {"hardness", hardness}, {"c1p", c1p}, {"reductions", reductions}};

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const bool expected_fail = std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
        std::cout << (v.pass ? "PASS " : "FAIL ") << id << " " << criteria[i].first << ": " << v.detail;
        if (expected_fail) std::cout << (v.pass ? " [listed as expected failure]" : " [expected failure]");
        std::cout << std::endl;
        if (v.pass == expected_fail) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
