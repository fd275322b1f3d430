#include "balcol/k_color.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "balcol/errors.hpp"

namespace balcol {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Side opposite(Side s) { return s == Side::Start ? Side::End : Side::Start; }

}  // namespace

std::string to_string(const Item& item) {
    switch (item.kind) {
        case ItemKind::Real: return "I" + std::to_string(item.id);
        case ItemKind::VirtualX: return "x" + std::to_string(item.id + 1);
        case ItemKind::VirtualY: return "y" + std::to_string(item.id + 1);
    }
    return "?";
}

void ConstraintSystem::add(std::span<const Item> items, Side side) {
    BALCOL_CHECK(items.size() == static_cast<std::size_t>(k_), "constraint must hold exactly k items");
    items_.insert(items_.end(), items.begin(), items.end());
    sides_.push_back(side);
}

const std::vector<std::size_t>& ItemOccurrences::of(const Item& item) const {
    switch (item.kind) {
        case ItemKind::Real: return real.at(item.id);
        case ItemKind::VirtualX: return x.at(item.id);
        case ItemKind::VirtualY: return y.at(item.id);
    }
    throw InternalError("unknown item kind");
}

ItemOccurrences occurrences(const ConstraintSystem& system) {
    ItemOccurrences occ;
    occ.real.resize(system.num_intervals());
    occ.x.resize(system.num_x());
    occ.y.resize(system.num_y());
    for (std::size_t c = 0; c < system.size(); ++c) {
        for (const Item& item : system.items(c)) {
            auto& list = item.kind == ItemKind::Real ? occ.real[item.id]
                         : item.kind == ItemKind::VirtualX ? occ.x[item.id]
                                                           : occ.y[item.id];
            list.push_back(c);
        }
    }
    return occ;
}

ConstraintSystem build_constraints(const NormalizedInstance& norm, int k) {
    if (k < 2) throw InputError("constraint construction needs k >= 2");
    const auto kk = static_cast<std::size_t>(k);
    ConstraintSystem system(norm.size(), k);

    enum class Mode { AtRoot, CollectingStarts, CollectingEnds };
    Mode mode = Mode::AtRoot;
    std::vector<Item> active;
    std::vector<Item> xs, ys, buffer;
    active.reserve(kk);

    for (const Event& e : norm.events) {
        if (mode == Mode::AtRoot)
            mode = e.type == EventType::Start ? Mode::CollectingStarts : Mode::CollectingEnds;
        const EventType collected = mode == Mode::CollectingStarts ? EventType::Start : EventType::End;
        const Side near = mode == Mode::CollectingStarts ? Side::Start : Side::End;

        if (e.type == collected) {
            active.push_back(Item::real(e.interval));
            if (active.size() == kk) {
                system.add(active, near);
                active.clear();
                mode = Mode::AtRoot;
            }
            continue;
        }

        // Opposite event with j active items: one constraint completes the
        // active set with fresh x's, the other pairs the same x's with the
        // event's interval and j-1 fresh y's that replace the active set.
        const std::size_t j = active.size();
        BALCOL_CHECK(j >= 1, "opposite event at root");
        xs.clear();
        for (std::size_t i = j; i < kk; ++i) xs.push_back(system.fresh_x());
        ys.clear();
        for (std::size_t i = 1; i < j; ++i) ys.push_back(system.fresh_y());

        buffer.assign(active.begin(), active.end());
        buffer.insert(buffer.end(), xs.begin(), xs.end());
        system.add(buffer, near);

        buffer.assign(ys.begin(), ys.end());
        buffer.push_back(Item::real(e.interval));
        buffer.insert(buffer.end(), xs.begin(), xs.end());
        system.add(buffer, opposite(near));

        active.assign(ys.begin(), ys.end());
        if (active.empty()) mode = Mode::AtRoot;
    }
    BALCOL_CHECK(mode == Mode::AtRoot && active.empty(), "event scan did not end at the root");
    return system;
}

std::size_t EdgeGraph::max_degree() const {
    std::vector<std::size_t> degree(num_vertices(), 0);
    for (const auto& [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

EdgeGraph constraints_to_graph(const ConstraintSystem& system) {
    const std::size_t n = system.num_intervals();
    const std::size_t offset_x = n;
    const std::size_t offset_y = n + system.num_x();
    const std::size_t total = offset_y + system.num_y();
    const auto slot = [&](const Item& item) {
        switch (item.kind) {
            case ItemKind::Real: return item.id;
            case ItemKind::VirtualX: return offset_x + item.id;
            case ItemKind::VirtualY: return offset_y + item.id;
        }
        return kNone;
    };

    std::vector<std::size_t> at_start(total, kNone), at_end(total, kNone);
    for (std::size_t c = 0; c < system.size(); ++c) {
        auto& target = system.side(c) == Side::Start ? at_start : at_end;
        for (const Item& item : system.items(c)) {
            std::size_t& cell = target[slot(item)];
            if (cell != kNone)
                throw InternalError("item " + to_string(item) + " occurs twice on one side");
            cell = c;
        }
    }

    EdgeGraph graph;
    graph.vertex_side.resize(system.size());
    for (std::size_t c = 0; c < system.size(); ++c) graph.vertex_side[c] = system.side(c);
    graph.edges.reserve(total);
    graph.items.reserve(total);
    for (std::size_t s = 0; s < total; ++s) {
        const Item item = s < offset_x   ? Item::real(s)
                          : s < offset_y ? Item::x(s - offset_x)
                                         : Item::y(s - offset_y);
        if (at_start[s] == kNone || at_end[s] == kNone)
            throw InternalError("item " + to_string(item) + " does not occur in both a ⊢ and a ⊣ constraint");
        graph.edges.emplace_back(at_start[s], at_end[s]);
        graph.items.push_back(item);
    }
    return graph;
}

EdgeColoring edge_color(const EdgeGraph& graph, int k) {
    if (k < 1 || k > 65535) throw InputError("edge coloring needs 1 <= k <= 65535");
    const std::size_t nv = graph.num_vertices();
    const auto kk = static_cast<std::size_t>(k);
    if (graph.edges.size() >= std::numeric_limits<std::uint32_t>::max() || nv >= std::numeric_limits<std::uint32_t>::max())
        throw InputError("graph too large");
    std::vector<std::size_t> degree(nv, 0);
    for (const auto& [u, v] : graph.edges) {
        if (u >= nv || v >= nv) throw InputError("edge endpoint out of range");
        if (graph.vertex_side[u] == graph.vertex_side[v]) throw InputError("edge joins two vertices of one side");
        if (++degree[u] > kk || ++degree[v] > kk)
            throw InputError("vertex degree exceeds k = " + std::to_string(k));
    }

    // slot[v * k + c] = (edge colored c at v, its other endpoint). One vertex
    // row is one cache line for k = 8, so each path step touches one line.
    struct Slot {
        std::uint32_t edge;
        std::uint32_t other;
    };
    constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
    std::vector<Slot> slot(nv * kk, Slot{kFree, 0});
    std::vector<std::uint16_t> color(graph.edges.size(), 0);  // 0-based
    struct Step {
        std::uint32_t edge;
        std::uint32_t from;
        std::uint32_t to;
    };
    std::vector<Step> path;

    const auto is_free = [&](std::size_t v, std::size_t c) { return slot[v * kk + c].edge == kFree; };
    const auto first_free = [&](std::size_t v) {
        for (std::size_t c = 0; c < kk; ++c)
            if (is_free(v, c)) return c;
        throw InternalError("no free color at vertex");
    };
    const auto place = [&](std::uint32_t e, std::uint32_t x, std::uint32_t y, std::size_t c) {
        color[e] = static_cast<std::uint16_t>(c);
        slot[x * kk + c] = {e, y};
        slot[y * kk + c] = {e, x};
    };

    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto u = static_cast<std::uint32_t>(graph.edges[e].first);
        const auto v = static_cast<std::uint32_t>(graph.edges[e].second);
        std::size_t alpha = kNone;
        for (std::size_t c = 0; c < kk && alpha == kNone; ++c)
            if (is_free(u, c) && is_free(v, c)) alpha = c;
        if (alpha == kNone) {
            // a is free at u, b is free at v. Either flip the a/b path leaving
            // v and use a, or the b/a path leaving u and use b. Walk both in
            // lockstep and flip whichever ends first.
            const std::size_t a = first_free(u);
            const std::size_t b = first_free(v);
            std::uint32_t walker[2] = {v, u};
            std::size_t next_color[2] = {a, b};
            int done = -1;
            while (done < 0) {
                for (int side = 0; side < 2; ++side) {
                    const Slot& s = slot[walker[side] * kk + next_color[side]];
                    if (s.edge == kFree) {
                        done = side;
                        break;
                    }
                    walker[side] = s.other;
                    next_color[side] = next_color[side] == a ? b : a;
                }
            }
            alpha = done == 0 ? a : b;
            const std::size_t beta = done == 0 ? b : a;
            path.clear();
            std::uint32_t w = done == 0 ? v : u;
            std::size_t c = alpha;
            while (!is_free(w, c)) {
                const Slot s = slot[w * kk + c];
                path.push_back({s.edge, w, s.other});
                w = s.other;
                c = c == alpha ? beta : alpha;
            }
            for (const Step& st : path) {
                slot[st.from * kk + color[st.edge]].edge = kFree;
                slot[st.to * kk + color[st.edge]].edge = kFree;
            }
            for (const Step& st : path) place(st.edge, st.from, st.to, color[st.edge] == alpha ? beta : alpha);
            BALCOL_CHECK(is_free(u, alpha) && is_free(v, alpha), "alternating path reached the other endpoint");
        }
        place(static_cast<std::uint32_t>(e), u, v, alpha);
    }

    EdgeColoring result;
    result.colors.resize(color.size());
    for (std::size_t e = 0; e < color.size(); ++e) result.colors[e] = color[e] + 1;
    return result;
}

Coloring k_color(const Instance& instance) {
    Coloring coloring;
    coloring.colors.assign(instance.size(), 1);
    if (instance.k() == 1 || instance.empty()) return coloring;

    const auto system = build_constraints(normalize(instance), instance.k());
    const auto graph = constraints_to_graph(system);
    const auto edges = edge_color(graph, instance.k());
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const Item& item = graph.items[e];
        if (item.kind == ItemKind::Real) coloring.colors[item.id] = edges.colors[e];
    }
    return coloring;
}

std::vector<std::vector<int>> pair_imbalances(const Instance& instance, const Coloring& coloring) {
    check_coloring(instance, coloring);
    const auto k = static_cast<std::size_t>(instance.k());
    std::vector<std::vector<int>> worst(k, std::vector<int>(k, 0));
    if (instance.empty()) return worst;
    std::vector<int> counts(k, 0);
    sweep_regions(
        instance, normalize(instance),
        [&](std::size_t id) { ++counts[static_cast<std::size_t>(coloring.colors[id] - 1)]; },
        [&](std::size_t id) { --counts[static_cast<std::size_t>(coloring.colors[id] - 1)]; },
        [&](const Coord&, const Coord&, std::size_t) {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    const int d = std::abs(counts[i] - counts[j]);
                    worst[i][j] = std::max(worst[i][j], d);
                    worst[j][i] = worst[i][j];
                }
        });
    return worst;
}

namespace {

// Each interval takes the least used color among those active at its start.
Coloring greedy_sweep_coloring(const Instance& instance) {
    const auto k = static_cast<std::size_t>(instance.k());
    Coloring coloring;
    coloring.colors.assign(instance.size(), 1);
    std::vector<int> counts(k, 0);
    for (const Event& e : normalize(instance).events) {
        auto& c = coloring.colors[e.interval];
        if (e.type == EventType::Start) {
            c = static_cast<int>(std::min_element(counts.begin(), counts.end()) - counts.begin()) + 1;
            ++counts[static_cast<std::size_t>(c - 1)];
        } else {
            --counts[static_cast<std::size_t>(c - 1)];
        }
    }
    return coloring;
}

}  // namespace

DeWerraResult k_color_dewerra(const Instance& instance, std::optional<Coloring> initial) {
    const int k = instance.k();
    DeWerraResult result;
    if (initial) {
        result.coloring = std::move(*initial);
    } else {
        result.coloring = greedy_sweep_coloring(instance);
    }
    check_coloring(instance, result.coloring);
    if (k < 2) return result;

    // Every pass strictly lowers the sum of squared counts, so this cap only
    // guards against bugs.
    const std::size_t limit = 64 + static_cast<std::size_t>(k) * static_cast<std::size_t>(k) * (instance.size() + 1);
    for (;;) {
        const auto worst = pair_imbalances(instance, result.coloring);
        int best = -1;
        int ci = 0, cj = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (worst[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > best) {
                    best = worst[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    ci = i + 1;
                    cj = j + 1;
                }
        if (best <= 1) return result;
        if (static_cast<std::size_t>(result.recolorings) >= limit)
            throw InternalError("de Werra rebalancing exceeded " + std::to_string(limit) + " recolorings");

        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < instance.size(); ++i) {
            const int c = result.coloring.colors[i];
            if (c == ci || c == cj) ids.push_back(i);
        }
        const auto sub = two_color(instance.subset(ids, 2));
        const int keep = sub.colors.front();
        for (std::size_t t = 0; t < ids.size(); ++t)
            result.coloring.colors[ids[t]] = sub.colors[t] == keep ? ci : cj;
        ++result.recolorings;
    }
}

Instance hypergraph_to_instance(const BinaryMatrix& matrix, int k) {
    if (matrix.cells.size() != matrix.rows * matrix.cols) throw InputError("matrix cell count mismatch");
    std::vector<std::pair<Coord, Coord>> bounds;
    bounds.reserve(matrix.rows);
    std::int64_t next_dummy = static_cast<std::int64_t>(matrix.cols) + 1;
    for (std::size_t r = 0; r < matrix.rows; ++r) {
        std::size_t first = matrix.cols, last = 0;
        for (std::size_t c = 0; c < matrix.cols; ++c) {
            if (!matrix.at(r, c)) continue;
            first = std::min(first, c);
            last = c;
        }
        if (first == matrix.cols) {
            bounds.emplace_back(Coord(next_dummy), Coord(next_dummy));
            ++next_dummy;
            continue;
        }
        for (std::size_t c = first; c <= last; ++c)
            if (!matrix.at(r, c))
                throw InputError("row " + std::to_string(r + 1) +
                                 " does not have consecutive ones in the given column order");
        bounds.emplace_back(Coord(static_cast<std::int64_t>(first + 1)), Coord(static_cast<std::int64_t>(last + 1)));
    }
    return Instance(std::move(bounds), k);
}

int column_imbalance(const BinaryMatrix& matrix, const Coloring& coloring, int k) {
    if (coloring.size() != matrix.rows) throw InputError("coloring length does not match row count");
    int worst = 0;
    std::vector<int> counts(static_cast<std::size_t>(k));
    for (std::size_t c = 0; c < matrix.cols; ++c) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t r = 0; r < matrix.rows; ++r)
            if (matrix.at(r, c)) ++counts.at(static_cast<std::size_t>(coloring.colors[r] - 1));
        const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        worst = std::max(worst, *hi - *lo);
    }
    return worst;
}

}  // namespace balcol
