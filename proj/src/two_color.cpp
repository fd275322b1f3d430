#include "balcol/two_color.hpp"

#include <deque>
#include <string>

#include "balcol/errors.hpp"

namespace balcol {

std::vector<EventPair> pair_events(const NormalizedInstance& norm) {
    std::vector<EventPair> pairs;
    pairs.reserve(norm.size());
    for (std::size_t r = 0; r + 1 < norm.events.size(); r += 2) {
        const Event& a = norm.events[r];
        const Event& b = norm.events[r + 1];
        pairs.push_back({{r + 1, a.interval, a.type}, {r + 2, b.interval, b.type}});
    }
    return pairs;
}

std::pair<UnionFind, ConstraintGraph2> build_constraint_graph(const std::vector<EventPair>& pairs) {
    const std::size_t n = pairs.size();
    UnionFind chains(n);

    // A start/end pair of different intervals merges them into one chain.
    for (const auto& p : pairs) {
        if (p.first.interval == p.second.interval) continue;
        if (p.first.type != p.second.type) chains.unite(p.first.interval, p.second.interval);
    }

    ConstraintGraph2 graph;
    graph.chain_of.assign(n, 0);
    std::vector<std::size_t> index_of_root(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = chains.find(i);
        if (index_of_root[root] == n) {
            index_of_root[root] = graph.num_chains++;
            graph.chain_min_id.push_back(i);
        }
        graph.chain_of[i] = index_of_root[root];
    }

    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto& p = pairs[pi];
        if (p.first.interval == p.second.interval || p.first.type != p.second.type) continue;
        graph.edges.push_back({graph.chain_of[p.first.interval], graph.chain_of[p.second.interval],
                               p.first.type == EventType::Start ? Side::Start : Side::End, pi});
    }
    return {std::move(chains), std::move(graph)};
}

Coloring two_color(const Instance& instance) {
    if (instance.k() != 2) throw InputError("two_color requires k = 2, got " + std::to_string(instance.k()));
    const auto norm = normalize(instance);
    const auto pairs = pair_events(norm);
    const auto graph = build_constraint_graph(pairs).second;

    std::vector<std::vector<std::size_t>> adjacent(graph.num_chains);
    for (const auto& e : graph.edges) {
        adjacent[e.a].push_back(e.b);
        adjacent[e.b].push_back(e.a);
    }

    std::vector<int> chain_color(graph.num_chains, 0);
    std::deque<std::size_t> queue;
    for (std::size_t start = 0; start < graph.num_chains; ++start) {
        if (chain_color[start] != 0) continue;
        chain_color[start] = 1;
        queue.push_back(start);
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : adjacent[v]) {
                if (chain_color[w] == 0) {
                    chain_color[w] = 3 - chain_color[v];
                    queue.push_back(w);
                } else if (chain_color[w] == chain_color[v]) {
                    throw InternalError("constraint graph has an odd cycle");
                }
            }
        }
    }

    Coloring coloring;
    coloring.colors.resize(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) coloring.colors[i] = chain_color[graph.chain_of[i]];
    return coloring;
}

}  // namespace balcol
