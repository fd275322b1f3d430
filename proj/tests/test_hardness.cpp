#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "balcol/errors.hpp"
#include "balcol/hardness.hpp"
#include "test_support.hpp"

using namespace balcol;

namespace {

NaeFormula formula(int vars, std::vector<std::array<int, 3>> clauses) { return NaeFormula{vars, std::move(clauses)}; }

Box rect(std::size_t id, int x0, int x1, int y0, int y1) {
    Box b;
    b.id = id;
    b.extent = {{Coord(x0), Coord(x1)}, {Coord(y0), Coord(y1)}};
    return b;
}

BoxInstance plain(std::vector<Box> boxes, int k) {
    BoxInstance inst;
    inst.k = k;
    inst.boxes = std::move(boxes);
    return inst;
}

// Minimum box imbalance over all colorings.
int brute_box_min(const BoxInstance& inst) {
    const std::size_t n = inst.size();
    Coloring c{std::vector<int>(n, 1)};
    int best = box_imbalance(inst, c).value;
    while (true) {
        std::size_t i = 0;
        while (i < n && c.colors[i] == inst.k) c.colors[i++] = 1;
        if (i == n) break;
        ++c.colors[i];
        best = std::min(best, box_imbalance(inst, c).value);
    }
    return best;
}

// S(x) probed at every combination of per-axis endpoints and midpoints.
std::set<std::vector<std::size_t>> direct_cells(const BoxInstance& inst) {
    if (inst.boxes.empty()) return {};
    std::vector<std::vector<Coord>> axis(inst.d);
    for (std::size_t j = 0; j < inst.d; ++j) {
        for (const Box& b : inst.boxes) {
            axis[j].push_back(b.extent[j].first);
            axis[j].push_back(b.extent[j].second);
        }
        std::sort(axis[j].begin(), axis[j].end());
        axis[j].erase(std::unique(axis[j].begin(), axis[j].end()), axis[j].end());
        const std::size_t m = axis[j].size();
        for (std::size_t i = 0; i + 1 < m; ++i) axis[j].push_back(Coord::midpoint(axis[j][i], axis[j][i + 1]));
    }
    std::set<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(inst.d, 0);
    while (true) {
        std::vector<std::size_t> s;
        for (const Box& b : inst.boxes) {
            bool in = true;
            for (std::size_t j = 0; j < inst.d && in; ++j)
                in = b.extent[j].first <= axis[j][idx[j]] && axis[j][idx[j]] <= b.extent[j].second;
            if (in) s.push_back(b.id);
        }
        if (!s.empty()) out.insert(s);
        std::size_t j = 0;
        while (j < inst.d && ++idx[j] == axis[j].size()) idx[j++] = 0;
        if (j == inst.d) break;
    }
    return out;
}

// In a balanced 2-coloring every clause rectangle shares its variable's color.
void check_chain_equality(const NaeFormula& f, const BoxInstance& inst, const Coloring& c) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (std::size_t s = 0; s < 3; ++s) {
            const std::size_t var_box = inst.variable_boxes[static_cast<std::size_t>(f.clauses[i][s] - 1)];
            CHECK(c.colors[inst.clause_boxes[i][s]] == c.colors[var_box]);
        }
}

}  // namespace

TEST_CASE("NAE brute force examples") {
    const auto a = nae_brute_force(formula(3, {{1, 2, 3}}));
    REQUIRE(a.has_value());
    CHECK(nae_satisfies(formula(3, {{1, 2, 3}}), *a));
    CHECK(*a == std::vector<bool>{true, false, false});
    CHECK_FALSE(nae_brute_force(formula(1, {{1, 1, 1}})).has_value());
    const auto c = nae_brute_force(formula(2, {{1, 1, 2}}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] != (*c)[1]);
    CHECK(nae_brute_force(formula(0, {})).has_value());
    CHECK_THROWS_AS(formula(2, {{1, 2, 3}}).validate(), InputError);
    CHECK_THROWS_AS(nae_brute_force(formula(25, {})), InputError);
}

TEST_CASE("property: NAE brute force is correct and the parallel search matches the serial one") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = testing_support::random_formula(rng, 8, 10);
        const auto par = nae_brute_force(f);
        CHECK(par == nae_brute_force_serial(f));
        CHECK(par.has_value() == testing_support::naive_nae(f));
        if (par) CHECK(nae_satisfies(f, *par));
    }
}

TEST_CASE("box imbalance examples") {
    const auto one = plain({rect(0, 0, 1, 0, 1)}, 2);
    CHECK(box_imbalance(one, Coloring{{1}}).value == 1);
    const auto apart = plain({rect(0, 0, 1, 0, 1), rect(1, 2, 3, 0, 1), rect(2, 4, 5, 0, 1)}, 2);
    CHECK(box_imbalance(apart, Coloring{{1, 2, 1}}).value == 1);

    // each pair also overlaps outside the third rectangle
    const auto three = plain({rect(0, 0, 4, 0, 2), rect(1, 2, 6, 0, 2), rect(2, 1, 5, 1, 5)}, 2);
    CHECK(brute_box_min(three) == 2);
    CHECK_FALSE(decide_balanced_boxes(three).has_value());

    CHECK_THROWS_AS(box_imbalance(three, Coloring{{1, 2}}), InputError);

    // three rectangles whose pairwise overlaps all equal the common cell
    const auto gadget = plain({rect(0, 0, 36, 0, 12), rect(1, 24, 36, 0, 30), rect(2, 24, 56, 0, 12)}, 2);
    CHECK(brute_box_min(gadget) == 1);
    CHECK(box_imbalance(gadget, Coloring{{1, 1, 1}}).value == 3);
}

TEST_CASE("property: box cells match direct probing") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Box> boxes;
        const std::size_t n = rng() % 7;
        for (std::size_t i = 0; i < n; ++i) {
            int x0 = static_cast<int>(rng() % 8), x1 = static_cast<int>(rng() % 8);
            int y0 = static_cast<int>(rng() % 8), y1 = static_cast<int>(rng() % 8);
            boxes.push_back(rect(i, std::min(x0, x1), std::max(x0, x1), std::min(y0, y1), std::max(y0, y1)));
        }
        const auto inst = plain(std::move(boxes), 2);
        const auto cells = box_cells(inst);
        const std::set<std::vector<std::size_t>> got(cells.begin(), cells.end());
        CHECK(got == direct_cells(inst));
        if (inst.size() <= 5) {
            const auto found = decide_balanced_boxes(inst);
            CHECK(found.has_value() == (brute_box_min(inst) <= 1));
        }
    }
}

TEST_CASE("reduction of a single satisfiable clause") {
    const auto f = formula(3, {{1, 2, 3}});
    const auto inst = reduce_nae_to_boxes(f, 2);
    std::map<BoxTag, int> tags;
    for (const Box& b : inst.boxes) ++tags[b.tag];
    CHECK(tags[BoxTag::Clause] == 3);
    CHECK(tags[BoxTag::Variable] == 3);
    CHECK(tags[BoxTag::Cover] == 0);
    CHECK(inst.clause_boxes.size() == 1);
    const auto audit = audit_reduction(inst);
    CHECK(audit.ok);
    const auto c = decide_balanced_boxes(inst);
    REQUIRE(c.has_value());
    CHECK(box_imbalance(inst, *c).value <= 1);
    check_chain_equality(f, inst, *c);
}

TEST_CASE("reduction of an all-equal clause has no balanced coloring") {
    const auto inst = reduce_nae_to_boxes(formula(1, {{1, 1, 1}}), 2);
    CHECK(audit_reduction(inst).ok);
    CHECK_FALSE(decide_balanced_boxes(inst).has_value());
}

TEST_CASE("cover rectangles for k = 3") {
    const auto f = formula(3, {{1, 2, 3}});
    const auto inst = reduce_nae_to_boxes(f, 3);
    REQUIRE(inst.cover_boxes.size() == 1);
    CHECK(audit_reduction(inst).ok);
    const auto c = decide_balanced_boxes(inst);
    REQUIRE(c.has_value());
    const int cover = c->colors[inst.cover_boxes[0]];
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (i != inst.cover_boxes[0]) CHECK(c->colors[i] != cover);

    const auto k4 = reduce_nae_to_boxes(f, 4);
    CHECK(k4.cover_boxes.size() == 2);
    CHECK(audit_reduction(k4).ok);
    CHECK_FALSE(decide_balanced_boxes(reduce_nae_to_boxes(formula(1, {{1, 1, 1}}), 3)).has_value());
    CHECK_THROWS_AS(reduce_nae_to_boxes(f, 1), InputError);
}

TEST_CASE("property: the box reduction decides NAE satisfiability") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = testing_support::random_formula(rng, 3, 5);
        const bool sat = testing_support::naive_nae(f);
        const auto inst = reduce_nae_to_boxes(f, 2);
        CHECK(audit_reduction(inst).ok);
        const auto c = decide_balanced_boxes(inst);
        CHECK(c.has_value() == sat);
        if (c) check_chain_equality(f, inst, *c);
    }
}

TEST_CASE("lifting keeps the cell structure") {
    const auto inst = reduce_nae_to_boxes(formula(3, {{1, 2, 2}}), 2);
    const auto lifted = lift_boxes(inst, 4);
    CHECK(lifted.d == 4);
    for (const Box& b : lifted.boxes) {
        REQUIRE(b.extent.size() == 4);
        CHECK(b.extent[3].first == Coord(0));
        CHECK(b.extent[3].second == Coord(0));
    }
    CHECK(box_cells(lifted) == box_cells(inst));
    CHECK(decide_balanced_boxes(lifted).has_value() == decide_balanced_boxes(inst).has_value());
    CHECK_THROWS_AS(lift_boxes(lifted, 2), InputError);
}

TEST_CASE("decider limits and trivial inputs") {
    const auto empty = decide_balanced_boxes(plain({}, 2));
    REQUIRE(empty.has_value());
    CHECK(empty->colors.empty());
    const auto inst = reduce_nae_to_boxes(formula(3, {{1, 2, 3}}), 2);
    CHECK_THROWS_AS(decide_balanced_boxes(inst, 5), InputError);
}

TEST_CASE("svg output is a closed document") {
    const auto inst = reduce_nae_to_boxes(formula(3, {{1, 2, 3}}), 3);
    const auto svg = boxes_to_svg(inst);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    const auto c = decide_balanced_boxes(inst);
    CHECK(boxes_to_svg(inst, c).size() >= svg.size());
}

TEST_CASE("partition reduction") {
    const auto a = reduce_partition_to_weighted({1, 1, 2});
    CHECK(a.instance.size() == 3);
    CHECK(a.instance.k() == 2);
    CHECK(weighted_imbalance(a, Coloring{{1, 1, 2}}) == 0);
    CHECK(weighted_imbalance(a, Coloring{{1, 2, 2}}) == 2);
    CHECK(min_weighted_imbalance(a) == 0);
    CHECK(min_weighted_imbalance(reduce_partition_to_weighted({1, 2})) == 1);
    CHECK(min_weighted_imbalance(reduce_partition_to_weighted({})) == 0);
    CHECK_THROWS_AS(reduce_partition_to_weighted({1, 0}), InputError);
}

TEST_CASE("multiple-intervals reduction") {
    const auto a = reduce_nae_to_multiple_intervals(formula(3, {{1, 2, 3}}));
    CHECK(a.instance.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.instance[i].lo == Coord(0));
        CHECK(a.instance[i].hi == Coord(1));
    }
    CHECK(a.groups == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK(decide_grouped(a).has_value());

    const auto b = reduce_nae_to_multiple_intervals(formula(1, {{1, 1, 1}}));
    CHECK(b.groups == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK_FALSE(decide_grouped(b).has_value());

    const auto c = reduce_nae_to_multiple_intervals(formula(4, {{1, 2, 3}, {1, 2, 4}}));
    CHECK(c.instance.size() == 6);
    CHECK(c.groups == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 4}, {2}, {5}});
    CHECK(c.instance[3].lo == Coord(3));
    CHECK(c.instance[3].hi == Coord(4));
}

TEST_CASE("property: the multiple-intervals reduction decides NAE satisfiability") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = testing_support::random_formula(rng, 4, 6);
        const auto g = reduce_nae_to_multiple_intervals(f);
        const auto c = decide_grouped(g);
        CHECK(c.has_value() == testing_support::naive_nae(f));
        if (c) CHECK(testing_support::naive_imbalance(g.instance, c->colors) <= 1);
    }
}
