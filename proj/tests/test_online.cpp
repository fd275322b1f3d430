#include <doctest.h>

#include <random>

#include "balcol/errors.hpp"
#include "balcol/k_color.hpp"
#include "balcol/online.hpp"
#include "test_support.hpp"

using namespace balcol;

namespace {

Instance make(std::initializer_list<std::pair<int, int>> list, int k) {
    std::vector<std::pair<Coord, Coord>> b;
    for (auto [lo, hi] : list) b.emplace_back(lo, hi);
    return Instance(std::move(b), k);
}

int signed_sum(const Transcript& t, const Coord& x) {
    int s = 0;
    for (const auto& step : t.steps)
        if (step.lo <= x && x <= step.hi) s += step.color == 1 ? 1 : (step.color == 2 ? -1 : 0);
    return s;
}

}  // namespace

TEST_CASE("run_online examples") {
    RoundRobin rr;
    const auto a = run_online(rr, make({{0, 3}, {1, 2}}, 2));
    CHECK(a.coloring.colors == std::vector<int>{1, 2});
    CHECK(a.imbalance.back() == 1);

    GreedyLeastLoaded greedy;
    const auto b = run_online(greedy, make({{0, 1}, {2, 3}, {4, 5}, {6, 7}}, 2));
    for (int v : b.imbalance) CHECK(v == 1);

    const auto e = run_online(rr, Instance({}, 2));
    CHECK(e.coloring.colors.empty());
    CHECK(e.imbalance.empty());

    CHECK(run_online(rr, make({{0, 1}, {1, 2}, {2, 3}}, 2)).coloring.colors == std::vector<int>{1, 2, 1});
    CHECK(run_online(greedy, make({{0, 10}, {1, 2}, {3, 4}}, 2)).coloring.colors == std::vector<int>{1, 2, 2});

    CHECK_THROWS_AS(run_online(rr, make({{2, 3}, {0, 1}}, 2)), InputError);
    FixedColor five(5);
    CHECK_THROWS_AS(run_online(five, make({{0, 1}}, 2)), InputError);
}

TEST_CASE("seeded random is reproducible") {
    const auto inst = make({{0, 9}, {1, 9}, {2, 9}, {3, 9}, {4, 9}, {5, 9}, {6, 9}, {7, 9}}, 3);
    SeededRandom a(7), b(7), c(8);
    const auto ra = run_online(a, inst).coloring;
    CHECK(ra == run_online(b, inst).coloring);
    CHECK(ra == run_online(a, inst).coloring);
    CHECK_FALSE(ra == run_online(c, inst).coloring);
}

TEST_CASE("algorithm factory") {
    CHECK(make_algorithm("round_robin")->name() == "round_robin");
    CHECK(make_algorithm("greedy_least_loaded")->name() == "greedy");
    CHECK(make_algorithm("random", 3)->name() == "seeded_random");
    CHECK(make_algorithm("fixed_3")->name() == "fixed_3");
    for (const char* bad : {"", "nope", "fixed_", "fixed_0", "fixed_x"}) CHECK_THROWS_AS(make_algorithm(bad), InputError);
}

TEST_CASE("property: prefix imbalances match direct evaluation") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const auto inst = testing_support::random_instance(rng, rng() % 20, k);
        Coloring c;
        for (std::size_t i = 0; i < inst.size(); ++i) c.colors.push_back(1 + static_cast<int>(rng() % k));
        const auto prefix = prefix_imbalances(inst, c);
        for (std::size_t j = 0; j < inst.size(); ++j) {
            std::vector<std::size_t> ids(j + 1);
            for (std::size_t i = 0; i <= j; ++i) ids[i] = i;
            const std::vector<int> cols(c.colors.begin(), c.colors.begin() + static_cast<long>(j) + 1);
            CHECK(prefix[j] == testing_support::naive_imbalance(inst.subset(ids, k), cols));
        }
    }
}

TEST_CASE("adversary against constant answers") {
    FixedColor plus(1), minus(2);
    const auto t4 = adversary_k2(plus, 4);
    CHECK(t4.steps.back().simb_right == 4);
    CHECK(t4.final_imbalance() >= 4);
    const auto t3 = adversary_k2(minus, 3);
    CHECK(t3.steps.back().simb_left == -3);
    CHECK(t3.final_imbalance() >= 3);
}

TEST_CASE("property: adversary invariants for every built-in algorithm") {
    std::vector<std::unique_ptr<OnlineAlgorithm>> algs;
    algs.push_back(make_algorithm("round_robin"));
    algs.push_back(make_algorithm("greedy"));
    for (std::uint64_t seed : {1, 2, 3}) algs.push_back(make_algorithm("seeded_random", seed));
    algs.push_back(make_algorithm("fixed_1"));
    algs.push_back(make_algorithm("fixed_2"));
    for (auto& alg : algs) {
        for (int t : {1, 2, 7, 30, 60}) {
            const auto tr = adversary_k2(*alg, t);
            REQUIRE(tr.steps.size() == static_cast<std::size_t>(t));
            CHECK(tr.final_imbalance() >= (t + 2) / 3);
            CHECK(tr.plus + tr.minus == t);
            for (std::size_t i = 1; i < tr.steps.size(); ++i) CHECK(tr.steps[i - 1].lo < tr.steps[i].lo);

            // replay L and R from the answers and recount at their midpoints
            std::pair<Coord, Coord> L{Coord(0), Coord(1)}, R{Coord(2), Coord(3)};
            int p = 0, m = 0;
            Transcript prefix;
            for (const auto& step : tr.steps) {
                prefix.steps.push_back(step);
                const Coord mr = Coord::midpoint(R.first, R.second);
                if (step.color == 1) {
                    ++p;
                    R = {R.first, mr};
                } else {
                    ++m;
                    R = {mr, R.second};
                }
                L = {step.lo, L.second};
                CHECK(signed_sum(prefix, Coord::midpoint(R.first, R.second)) == p);
                CHECK(signed_sum(prefix, Coord::midpoint(L.first, L.second)) == p - m);
                CHECK(step.simb_right == p);
                CHECK(step.simb_left == p - m);
            }
            CHECK(imbalance(tr.instance(), k_color(tr.instance())).value <= 1);
        }
    }
}

TEST_CASE("general adversary") {
    RoundRobin rr;
    const auto t = adversary_general(rr, 3, 30, 16);
    CHECK(t.final_imbalance() >= 10);
    CHECK_FALSE(t.stalled);
    for (std::size_t i = 1; i < t.steps.size(); ++i) CHECK(t.steps[i - 1].lo < t.steps[i].lo);

    FixedColor three(3);
    const auto s = adversary_general(three, 3, 10, 5);
    CHECK(s.stalled);
    CHECK(s.final_imbalance() >= 5);

    GreedyLeastLoaded g1, g2;
    const auto a = adversary_general(g1, 2, 20);
    const auto b = adversary_k2(g2, 20);
    CHECK(a.coloring() == b.coloring());
    CHECK(a.final_imbalance() == b.final_imbalance());
    CHECK_THROWS_AS(adversary_general(rr, 1, 5), InputError);
    CHECK_THROWS_AS(adversary_k2(rr, 0), InputError);
}
