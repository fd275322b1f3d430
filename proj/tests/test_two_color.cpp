#include <doctest.h>

#include <random>

#include "balcol/errors.hpp"
#include "balcol/two_color.hpp"
#include "test_support.hpp"

using namespace balcol;

namespace {

Instance make(std::initializer_list<std::pair<int, int>> list) {
    std::vector<std::pair<Coord, Coord>> b;
    for (auto [lo, hi] : list) b.emplace_back(lo, hi);
    return Instance(std::move(b), 2);
}

RankedEvent ev(std::size_t rank, std::size_t id, EventType t) { return {rank, id, t}; }

}  // namespace

TEST_CASE("pair_events") {
    const auto p1 = pair_events(normalize(make({{0, 1}})));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].first == ev(1, 0, EventType::Start));
    CHECK(p1[0].second == ev(2, 0, EventType::End));

    const auto p2 = pair_events(normalize(make({{0, 3}, {1, 2}})));
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].first == ev(1, 0, EventType::Start));
    CHECK(p2[0].second == ev(2, 1, EventType::Start));
    CHECK(p2[1].first == ev(3, 1, EventType::End));
    CHECK(p2[1].second == ev(4, 0, EventType::End));

    const auto p4 = pair_events(normalize(make({{0, 2}, {1, 4}, {3, 6}, {5, 7}})));
    REQUIRE(p4.size() == 4);
    const std::vector<std::pair<std::size_t, std::size_t>> ids{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    const std::vector<std::pair<EventType, EventType>> types{{EventType::Start, EventType::Start},
                                                             {EventType::End, EventType::Start},
                                                             {EventType::End, EventType::Start},
                                                             {EventType::End, EventType::End}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(p4[i].first.interval == ids[i].first);
        CHECK(p4[i].second.interval == ids[i].second);
        CHECK(p4[i].first.type == types[i].first);
        CHECK(p4[i].second.type == types[i].second);
        CHECK(p4[i].first.rank == 2 * i + 1);
    }
}

TEST_CASE("constraint graph examples") {
    {
        auto [uf, g] = build_constraint_graph(pair_events(normalize(make({{0, 3}, {1, 2}}))));
        CHECK(g.num_chains == 2);
        REQUIRE(g.edges.size() == 2);
        CHECK(g.edges[0].side == Side::Start);
        CHECK(g.edges[1].side == Side::End);
        CHECK(g.edges[0].a != g.edges[0].b);
    }
    {
        auto [uf, g] = build_constraint_graph(pair_events(normalize(make({{0, 2}, {1, 4}, {3, 6}, {5, 7}}))));
        CHECK(g.num_chains == 2);
        CHECK(g.chain_of[0] == g.chain_of[2]);
        CHECK(g.chain_of[1] == g.chain_of[3]);
        CHECK(g.chain_of[0] != g.chain_of[1]);
        REQUIRE(g.edges.size() == 2);
        CHECK(g.edges[0].side != g.edges[1].side);
    }
    {
        auto [uf, g] = build_constraint_graph(pair_events(normalize(make({{0, 1}}))));
        CHECK(g.num_chains == 1);
        CHECK(g.edges.empty());
    }
}

TEST_CASE("two_color examples") {
    const auto a = two_color(make({{0, 3}, {1, 2}}));
    CHECK(a.colors[0] != a.colors[1]);
    const auto b = make({{0, 2}, {1, 4}, {3, 6}, {5, 7}});
    const auto cb = two_color(b);
    CHECK(cb.colors[0] == cb.colors[2]);
    CHECK(cb.colors[1] == cb.colors[3]);
    CHECK(cb.colors[0] != cb.colors[1]);
    CHECK(imbalance(b, cb).value == 1);
    CHECK(two_color(Instance({}, 2)).colors.empty());
    CHECK(two_color(make({{0, 1}})).colors == std::vector<int>{1});
    CHECK_THROWS_AS(two_color(Instance({}, 3)), InputError);
}

TEST_CASE("property: random instances are balanced and every chain alternates") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto inst = testing_support::random_instance(rng, rng() % 201, 2);
        const auto c = two_color(inst);
        REQUIRE(c.size() == inst.size());
        CHECK(imbalance(inst, c).value <= 1);

        auto [uf, g] = build_constraint_graph(pair_events(normalize(inst)));
        std::vector<int> starts(g.num_chains, 0), ends(g.num_chains, 0);
        for (const auto& e : g.edges) {
            auto& side = e.side == Side::Start ? starts : ends;
            ++side[e.a];
            ++side[e.b];
        }
        for (std::size_t v = 0; v < g.num_chains; ++v) {
            CHECK(starts[v] <= 1);
            CHECK(ends[v] <= 1);
        }
        for (std::size_t i = 0; i < inst.size(); ++i)
            for (std::size_t j = i + 1; j < std::min(inst.size(), i + 3); ++j)
                if (g.chain_of[i] == g.chain_of[j]) CHECK(c.colors[i] == c.colors[j]);
    }
}

TEST_CASE("property: small instances reach the exhaustive minimum") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = testing_support::random_instance(rng, rng() % 10, 2);
        CHECK(imbalance(inst, two_color(inst)).value == min_imbalance_oracle(inst).value);
    }
}
