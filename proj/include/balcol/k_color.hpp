#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "balcol/core.hpp"
#include "balcol/two_color.hpp"

namespace balcol {

enum class ItemKind : std::uint8_t { Real, VirtualX, VirtualY };

/// An element of a constraint: a real interval or a placeholder.
/// Real items carry the interval id; virtual items carry a 0-based uid that is
/// unique within their kind.
struct Item {
    ItemKind kind = ItemKind::Real;
    std::size_t id = 0;

    static Item real(std::size_t i) { return {ItemKind::Real, i}; }
    static Item x(std::size_t uid) { return {ItemKind::VirtualX, uid}; }
    static Item y(std::size_t uid) { return {ItemKind::VirtualY, uid}; }

    friend bool operator==(const Item&, const Item&) = default;
};

std::string to_string(const Item& item);

/// Strong hypergraph coloring instance: every constraint holds exactly k items
/// that must receive pairwise different colors. Items are stored flat,
/// k per constraint.
class ConstraintSystem {
public:
    ConstraintSystem(std::size_t num_intervals, int k) : num_intervals_(num_intervals), k_(k) {}

    std::size_t size() const { return sides_.size(); }
    int k() const { return k_; }
    std::size_t num_intervals() const { return num_intervals_; }
    std::size_t num_x() const { return num_x_; }
    std::size_t num_y() const { return num_y_; }

    std::span<const Item> items(std::size_t c) const {
        return {items_.data() + c * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
    }
    Side side(std::size_t c) const { return sides_[c]; }

    void add(std::span<const Item> items, Side side);
    Item fresh_x() { return Item::x(num_x_++); }
    Item fresh_y() { return Item::y(num_y_++); }

private:
    std::size_t num_intervals_;
    int k_;
    std::size_t num_x_ = 0;
    std::size_t num_y_ = 0;
    std::vector<Item> items_;
    std::vector<Side> sides_;
};

/// Constraint ids in which each item occurs, indexed by item kind and id.
struct ItemOccurrences {
    std::vector<std::vector<std::size_t>> real;
    std::vector<std::vector<std::size_t>> x;
    std::vector<std::vector<std::size_t>> y;

    const std::vector<std::size_t>& of(const Item& item) const;
};

ItemOccurrences occurrences(const ConstraintSystem& system);

/// Scans events in rank order and emits k-item constraints so that any
/// solution of the system is a balanced k-coloring. Requires k >= 2.
ConstraintSystem build_constraints(const NormalizedInstance& norm, int k);

/// Bipartite multigraph: sides partition the vertices, every edge joins
/// opposite sides. `items` (optional) names the constraint item per edge.
struct EdgeGraph {
    std::vector<Side> vertex_side;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Item> items;

    std::size_t num_vertices() const { return vertex_side.size(); }
    std::size_t max_degree() const;
};

/// Throws InternalError unless every item occurs in exactly one ⊢ and one ⊣
/// constraint.
EdgeGraph constraints_to_graph(const ConstraintSystem& system);

struct EdgeColoring {
    std::vector<int> colors;  // 1..k per edge
};

/// König edge coloring by alternating-path recoloring. Throws InputError when
/// a vertex has degree above k or an edge joins two vertices of one side.
EdgeColoring edge_color(const EdgeGraph& graph, int k);

/// Balanced k-coloring of an interval instance (k = instance.k()).
Coloring k_color(const Instance& instance);

struct DeWerraResult {
    Coloring coloring;
    int recolorings = 0;
};

/// max over x of |c_i(x) - c_j(x)| for every color pair; entry [i][j] with
/// 0-based colors.
std::vector<std::vector<int>> pair_imbalances(const Instance& instance, const Coloring& coloring);

/// Iterative rebalancing: repeatedly 2-colors the worst color pair. Starts
/// from `initial` or a greedy sweep (each interval takes the least used color
/// among those active at its start). `recolorings` counts the passes; it is
/// not bounded by k(k-1)/2 in general.
DeWerraResult k_color_dewerra(const Instance& instance, std::optional<Coloring> initial = std::nullopt);

/// Dense 0/1 matrix; rows are hypergraph vertices, columns hyperedges.
struct BinaryMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> cells;  // row-major

    bool at(std::size_t r, std::size_t c) const { return cells[r * cols + c] != 0; }
};

/// Row i with ones in columns a..b (1-based) becomes interval [a, b]; all-zero
/// rows become disjoint points beyond column m. Throws InputError when a row's
/// ones are not consecutive in the given column order.
Instance hypergraph_to_instance(const BinaryMatrix& matrix, int k);

/// Maximum over columns of the color-count spread among rows with a 1 there.
int column_imbalance(const BinaryMatrix& matrix, const Coloring& coloring, int k);

}  // namespace balcol
