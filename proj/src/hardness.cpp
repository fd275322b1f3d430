#include "balcol/hardness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "balcol/errors.hpp"

namespace balcol {

// ---------------------------------------------------------------------------
// NAE-3SAT

void NaeFormula::validate() const {
    if (num_vars < 0) throw InputError("negative variable count");
    for (std::size_t i = 0; i < clauses.size(); ++i)
        for (int v : clauses[i])
            if (v < 1 || v > num_vars)
                throw InputError("clause " + std::to_string(i + 1) + " uses variable " + std::to_string(v) +
                                 " outside 1.." + std::to_string(num_vars));
}

bool nae_satisfies(const NaeFormula& formula, const std::vector<bool>& assignment) {
    for (const auto& c : formula.clauses) {
        const bool a = assignment.at(static_cast<std::size_t>(c[0] - 1));
        if (assignment.at(static_cast<std::size_t>(c[1] - 1)) == a && assignment.at(static_cast<std::size_t>(c[2] - 1)) == a)
            return false;
    }
    return true;
}

namespace {

constexpr int kMaxNaeVars = 24;

// Clauses as bitmasks over variables; a clause fails when its variables are
// all true or all false.
std::vector<std::uint32_t> clause_masks(const NaeFormula& formula) {
    formula.validate();
    if (formula.num_vars > kMaxNaeVars)
        throw InputError("exhaustive NAE search supports at most " + std::to_string(kMaxNaeVars) + " variables");
    std::vector<std::uint32_t> masks;
    for (const auto& c : formula.clauses) {
        std::uint32_t m = 0;
        for (int v : c) m |= std::uint32_t{1} << (v - 1);
        masks.push_back(m);
    }
    return masks;
}

bool nae_ok(const std::vector<std::uint32_t>& masks, std::uint32_t bits) {
    for (std::uint32_t m : masks) {
        const std::uint32_t on = bits & m;
        if (on == 0 || on == m) return false;
    }
    return true;
}

std::vector<bool> unpack(std::uint32_t bits, int n) {
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) a[static_cast<std::size_t>(v)] = ((bits >> v) & 1U) != 0;
    return a;
}

}  // namespace

std::optional<std::vector<bool>> nae_brute_force_serial(const NaeFormula& formula) {
    const auto masks = clause_masks(formula);
    const std::uint64_t space = std::uint64_t{1} << formula.num_vars;
    for (std::uint64_t b = 0; b < space; ++b)
        if (nae_ok(masks, static_cast<std::uint32_t>(b))) return unpack(static_cast<std::uint32_t>(b), formula.num_vars);
    return std::nullopt;
}

std::optional<std::vector<bool>> nae_brute_force(const NaeFormula& formula) {
    const auto masks = clause_masks(formula);
    const std::uint64_t space = std::uint64_t{1} << formula.num_vars;
    constexpr std::uint64_t block = std::uint64_t{1} << 16;
    for (std::uint64_t base = 0; base < space; base += block) {
        const std::uint64_t end = std::min(space, base + block);
        std::uint64_t found = end;
#pragma omp parallel for reduction(min : found) schedule(static)
        for (std::uint64_t b = base; b < end; ++b)
            if (b < found && nae_ok(masks, static_cast<std::uint32_t>(b))) found = b;
        if (found < end) return unpack(static_cast<std::uint32_t>(found), formula.num_vars);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Boxes

std::string to_string(BoxTag tag) {
    switch (tag) {
        case BoxTag::Clause: return "clause";
        case BoxTag::Variable: return "variable";
        case BoxTag::Chain: return "chain";
        case BoxTag::Crossing: return "crossing";
        case BoxTag::Cover: return "cover";
        case BoxTag::Plain: return "plain";
    }
    return "plain";
}

bool Box::intersects(const Box& other) const {
    for (std::size_t j = 0; j < extent.size(); ++j)
        if (extent[j].second < other.extent[j].first || other.extent[j].second < extent[j].first) return false;
    return true;
}

void BoxInstance::validate() const {
    if (d < 1) throw InputError("box dimension must be at least 1");
    if (k < 1) throw InputError("k must be at least 1");
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const Box& b = boxes[i];
        if (b.id != i) throw InputError("box ids must be 0..n-1 in order");
        if (b.extent.size() != d)
            throw InputError("box " + std::to_string(i) + " has " + std::to_string(b.extent.size()) +
                             " dimensions, expected " + std::to_string(d));
        for (const auto& [lo, hi] : b.extent)
            if (hi < lo) throw InputError("box " + std::to_string(i) + " has hi < lo");
    }
}

namespace {

// Builder for the planar reduction; everything lives on an integer grid.
class Layout {
public:
    explicit Layout(int k) { out_.d = 2; out_.k = k; }

    std::size_t add(std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1, BoxTag tag, std::string origin) {
        const std::size_t id = out_.boxes.size();
        out_.boxes.push_back(Box{id, {{Coord(x0), Coord(x1)}, {Coord(y0), Coord(y1)}}, tag, std::move(origin)});
        return id;
    }
    void expect(std::size_t a, std::size_t b) { out_.expected_pairs.emplace_back(std::min(a, b), std::max(a, b)); }
    BoxInstance& out() { return out_; }

private:
    BoxInstance out_;
};

// Clause gadget geometry relative to its base column.
constexpr std::int64_t kClauseWidth = 60;
constexpr std::int64_t kGadgetTop = 12;   // top of the two flat rectangles
constexpr std::int64_t kTowerTop = 30;    // top of the tall middle rectangle
constexpr std::int64_t kTrackBase = 40;   // y of the first horizontal track
constexpr std::int64_t kPitch = 20;       // spacing of tracks and columns
constexpr std::int64_t kHalf = 1;         // half width of a chain link

struct Connection {
    std::size_t clause = 0;
    int slot = 0;
    int var = 0;
    std::int64_t top_col = 0;     // column below the variable rectangle
    std::int64_t bottom_col = 0;  // column above the clause rectangle
    std::int64_t track = 0;       // y of its horizontal run
    std::int64_t end_y = 0;       // lowest y of the last link
};

}  // namespace

BoxInstance reduce_nae_to_boxes(const NaeFormula& formula, int k) {
    if (k < 2) throw InputError("the box reduction needs k >= 2");
    formula.validate();
    Layout lay(k);
    const std::size_t m = formula.clauses.size();

    // Connections, one per (clause, slot); c = 3 * clause + slot.
    std::vector<Connection> conns(3 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (int s = 0; s < 3; ++s) {
            Connection& c = conns[3 * i + static_cast<std::size_t>(s)];
            c.clause = i;
            c.slot = s;
            c.var = formula.clauses[i][static_cast<std::size_t>(s)];
            c.bottom_col = static_cast<std::int64_t>(i) * kClauseWidth + 10 + kPitch * s;
            c.track = kTrackBase + kPitch * static_cast<std::int64_t>(3 * i + static_cast<std::size_t>(s));
            c.end_y = s == 1 ? kTowerTop - 2 : kGadgetTop - 2;
        }
    const std::int64_t var_row = kTrackBase + kPitch * static_cast<std::int64_t>(3 * m) + kPitch;

    // Top columns: consecutive per variable, an empty pitch between variables.
    std::vector<std::pair<std::int64_t, std::int64_t>> var_span(static_cast<std::size_t>(formula.num_vars));
    std::int64_t cursor = 0;
    for (int v = 1; v <= formula.num_vars; ++v) {
        const std::int64_t first = cursor;
        for (auto& c : conns)
            if (c.var == v) {
                c.top_col = cursor;
                cursor += kPitch;
            }
        const std::int64_t last = cursor == first ? first : cursor - kPitch;
        var_span[static_cast<std::size_t>(v - 1)] = {first, last};
        cursor = last + 2 * kPitch;
    }

    // Nested covers first so that they get the lowest ids. All of them
    // contain the strip right of max_x, which nothing else reaches.
    const std::int64_t max_x = std::max<std::int64_t>(cursor, static_cast<std::int64_t>(m) * kClauseWidth);
    for (int j = 0; j < k - 2; ++j) {
        const std::int64_t pad = 10 * (j + 1);
        const std::size_t id = lay.add(-pad, max_x + 30 + pad, -pad, var_row + 10 + pad, BoxTag::Cover,
                                       "cover " + std::to_string(j + 1));
        lay.out().cover_boxes.push_back(id);
    }

    for (int v = 1; v <= formula.num_vars; ++v) {
        const auto [first, last] = var_span[static_cast<std::size_t>(v - 1)];
        lay.out().variable_boxes.push_back(
            lay.add(first - 5, last + 5, var_row, var_row + 10, BoxTag::Variable, "variable " + std::to_string(v)));
    }

    // Crossing columns on each horizontal run: another connection's vertical
    // passes through the track strictly between the run's ends.
    const auto crossings_of = [&](std::size_t ci) {
        const Connection& c = conns[ci];
        const std::int64_t lo = std::min(c.top_col, c.bottom_col), hi = std::max(c.top_col, c.bottom_col);
        std::vector<std::int64_t> xs;
        for (std::size_t cj = 0; cj < conns.size(); ++cj) {
            if (cj == ci) continue;
            const Connection& o = conns[cj];
            // Upper vertical of o spans (o.track, var_row); lower spans (end_y, o.track).
            if (o.top_col > lo && o.top_col < hi && c.track > o.track) xs.push_back(o.top_col);
            if (o.bottom_col > lo && o.bottom_col < hi && c.track < o.track) xs.push_back(o.bottom_col);
        }
        std::sort(xs.begin(), xs.end());
        if (c.bottom_col < c.top_col) std::reverse(xs.begin(), xs.end());
        return xs;
    };

    struct CrossingLinks {
        std::size_t before, after;
    };
    // (connection, column) -> the two halves of the horizontal link split there
    std::map<std::pair<std::size_t, std::int64_t>, CrossingLinks> split_at;
    std::vector<std::size_t> upper_link(conns.size()), lower_link(conns.size());

    for (std::size_t ci = 0; ci < conns.size(); ++ci) {
        const Connection& c = conns[ci];
        const std::string tag = "chain c" + std::to_string(ci) + " (clause " + std::to_string(c.clause + 1) +
                                " slot " + std::to_string(c.slot) + ", variable " + std::to_string(c.var) + ")";
        const auto xs = crossings_of(ci);
        const bool needs_parity = (3 + xs.size()) % 2 == 0;
        std::vector<std::size_t> chain;
        const std::size_t var_box = lay.out().variable_boxes[static_cast<std::size_t>(c.var - 1)];

        // Upper vertical, optionally split once just below the variable row.
        const std::int64_t a = c.top_col;
        if (needs_parity) {
            const std::int64_t cut = var_row - 5;
            chain.push_back(lay.add(a - kHalf, a + kHalf, cut - kHalf, var_row + 1, BoxTag::Chain, tag + " link"));
            chain.push_back(lay.add(a - kHalf, a + kHalf, c.track - kHalf, cut + kHalf, BoxTag::Chain, tag + " link"));
        } else {
            chain.push_back(lay.add(a - kHalf, a + kHalf, c.track - kHalf, var_row + 1, BoxTag::Chain, tag + " link"));
        }
        upper_link[ci] = chain.back();

        // Horizontal run, cut at every crossing with an overlap of +-2.
        const std::int64_t b = c.bottom_col;
        const std::int64_t dir = b > a ? 1 : -1;
        std::int64_t from = a - dir * kHalf;
        for (std::int64_t x0 : xs) {
            const std::int64_t to = x0 + dir * 2;
            chain.push_back(lay.add(std::min(from, to), std::max(from, to), c.track - kHalf, c.track + kHalf,
                                    BoxTag::Crossing, tag + " crossing"));
            split_at[{ci, x0}] = {chain.back(), chain.size()};  // `after` fixed below
            from = x0 - dir * 2;
        }
        const std::int64_t to = b + dir * kHalf;
        chain.push_back(lay.add(std::min(from, to), std::max(from, to), c.track - kHalf, c.track + kHalf,
                                xs.empty() ? BoxTag::Chain : BoxTag::Crossing, tag + (xs.empty() ? " link" : " crossing")));

        // Lower vertical into the clause rectangle.
        chain.push_back(lay.add(b - kHalf, b + kHalf, c.end_y, c.track + kHalf, BoxTag::Chain, tag + " link"));
        lower_link[ci] = chain.back();

        BALCOL_CHECK(chain.size() % 2 == 1, "chain has even length");
        lay.expect(var_box, chain.front());
        for (std::size_t t = 0; t + 1 < chain.size(); ++t) lay.expect(chain[t], chain[t + 1]);
        for (auto& [key, links] : split_at)
            if (key.first == ci) links.after = chain[links.after];
    }

    // Clause gadgets: two flat rectangles and a tower meeting only in A.
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t base = static_cast<std::int64_t>(i) * kClauseWidth;
        const std::string tag = "clause " + std::to_string(i + 1);
        const std::size_t x = lay.add(base, base + 36, 0, kGadgetTop, BoxTag::Clause, tag + " left");
        const std::size_t z = lay.add(base + 24, base + 36, 0, kTowerTop, BoxTag::Clause, tag + " middle");
        const std::size_t y = lay.add(base + 24, base + 56, 0, kGadgetTop, BoxTag::Clause, tag + " right");
        lay.out().clause_boxes.push_back({x, z, y});
        lay.expect(x, y);
        lay.expect(x, z);
        lay.expect(y, z);
        lay.expect(lower_link[3 * i], x);
        lay.expect(lower_link[3 * i + 1], z);
        lay.expect(lower_link[3 * i + 2], y);
    }

    // The vertical link passing a crossing touches both halves.
    for (const auto& [key, links] : split_at) {
        const std::int64_t x0 = key.second;
        for (std::size_t cj = 0; cj < conns.size(); ++cj) {
            if (conns[cj].top_col == x0) {
                lay.expect(upper_link[cj], links.before);
                lay.expect(upper_link[cj], links.after);
            }
            if (conns[cj].bottom_col == x0) {
                lay.expect(lower_link[cj], links.before);
                lay.expect(lower_link[cj], links.after);
            }
        }
    }

    // Covers meet everything.
    auto& out = lay.out();
    for (std::size_t c : out.cover_boxes)
        for (std::size_t j = 0; j < out.boxes.size(); ++j)
            if (j != c) lay.expect(c, j);
    std::sort(out.expected_pairs.begin(), out.expected_pairs.end());
    out.expected_pairs.erase(std::unique(out.expected_pairs.begin(), out.expected_pairs.end()), out.expected_pairs.end());
    return std::move(out);
}

BoxInstance lift_boxes(const BoxInstance& instance, std::size_t d) {
    if (d < instance.d) throw InputError("cannot lift to fewer dimensions");
    BoxInstance out = instance;
    out.d = d;
    for (Box& b : out.boxes) b.extent.resize(d, {Coord(0), Coord(0)});
    return out;
}

namespace {

struct CellGrid {
    // per box, per dimension: covered grid index range [first, last]
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> range;
    std::vector<std::size_t> grid_size;
};

// Grid index 2r is the r-th distinct endpoint, 2r + 1 the midpoint after it.
CellGrid make_grid(const BoxInstance& instance) {
    CellGrid g;
    g.range.assign(instance.size(), std::vector<std::pair<std::size_t, std::size_t>>(instance.d));
    for (std::size_t j = 0; j < instance.d; ++j) {
        std::vector<Coord> ends;
        for (const Box& b : instance.boxes) {
            ends.push_back(b.extent[j].first);
            ends.push_back(b.extent[j].second);
        }
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        g.grid_size.push_back(ends.empty() ? 0 : 2 * ends.size() - 1);
        const auto rank = [&](const Coord& x) {
            return static_cast<std::size_t>(std::lower_bound(ends.begin(), ends.end(), x) - ends.begin());
        };
        for (const Box& b : instance.boxes) g.range[b.id][j] = {2 * rank(b.extent[j].first), 2 * rank(b.extent[j].second)};
    }
    return g;
}

void collect_cells(const CellGrid& g, std::size_t dim, const std::vector<std::size_t>& candidates,
                   std::set<std::vector<std::size_t>>& cells) {
    if (candidates.empty()) return;
    if (dim == g.grid_size.size()) {
        cells.insert(candidates);
        return;
    }
    std::vector<std::size_t> active, previous;
    bool have_previous = false;
    for (std::size_t idx = 0; idx < g.grid_size[dim]; ++idx) {
        active.clear();
        for (std::size_t id : candidates) {
            const auto [lo, hi] = g.range[id][dim];
            if (lo <= idx && idx <= hi) active.push_back(id);
        }
        // Neighboring grid slices with the same members lead to the same cells.
        if (have_previous && active == previous) continue;
        collect_cells(g, dim + 1, active, cells);
        previous = active;
        have_previous = true;
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> box_cells(const BoxInstance& instance) {
    instance.validate();
    const auto grid = make_grid(instance);
    std::vector<std::size_t> all(instance.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::set<std::vector<std::size_t>> cells;
    collect_cells(grid, 0, all, cells);
    return {cells.begin(), cells.end()};
}

BoxImbalance box_imbalance(const BoxInstance& instance, const Coloring& coloring) {
    if (coloring.size() != instance.size())
        throw InputError("coloring has " + std::to_string(coloring.size()) + " entries, instance has " +
                         std::to_string(instance.size()) + " boxes");
    for (int c : coloring.colors)
        if (c < 1 || c > instance.k) throw InputError("color outside 1.." + std::to_string(instance.k));
    BoxImbalance result;
    std::vector<int> counts(static_cast<std::size_t>(instance.k));
    for (const auto& cell : box_cells(instance)) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t id : cell) ++counts[static_cast<std::size_t>(coloring.colors[id] - 1)];
        const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        if (result.worst_cell.empty() || *hi - *lo > result.value) {
            result.value = *hi - *lo;
            result.worst_cell = cell;
        }
    }
    return result;
}

AuditReport audit_reduction(const BoxInstance& instance) {
    AuditReport report;
    const auto problem = [&](std::string text) {
        report.ok = false;
        report.problems.push_back(std::move(text));
    };
    const std::set<std::pair<std::size_t, std::size_t>> expected(instance.expected_pairs.begin(),
                                                                 instance.expected_pairs.end());
    std::set<std::pair<std::size_t, std::size_t>> actual;
    for (std::size_t i = 0; i < instance.size(); ++i)
        for (std::size_t j = i + 1; j < instance.size(); ++j)
            if (instance.boxes[i].intersects(instance.boxes[j])) actual.emplace(i, j);
    for (const auto& [i, j] : actual)
        if (!expected.count({i, j}))
            problem("unexpected overlap: " + instance.boxes[i].origin + " / " + instance.boxes[j].origin);
    for (const auto& [i, j] : expected)
        if (!actual.count({i, j}))
            problem("missing overlap: " + instance.boxes[i].origin + " / " + instance.boxes[j].origin);

    if (!instance.clause_boxes.empty()) {
        const auto cells = box_cells(instance);
        for (std::size_t c = 0; c < instance.clause_boxes.size(); ++c) {
            const auto& trio = instance.clause_boxes[c];
            std::size_t shared = 0;
            for (const auto& cell : cells) {
                const auto has = [&](std::size_t id) { return std::binary_search(cell.begin(), cell.end(), id); };
                if (has(trio[0]) && has(trio[1]) && has(trio[2])) ++shared;
            }
            if (shared != 1)
                problem("clause " + std::to_string(c + 1) + " rectangles share " + std::to_string(shared) +
                        " distinct cells instead of one");
        }
    }
    return report;
}

namespace {

class BoxSearch {
public:
    BoxSearch(const BoxInstance& instance, std::uint64_t node_limit)
        : n_(instance.size()), k_(static_cast<std::size_t>(instance.k)), node_limit_(node_limit) {
        const auto cells = box_cells(instance);
        cells_of_.resize(n_);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::size_t size = cells[c].size();
            floor_.push_back(static_cast<int>(size / k_));
            extra_.push_back(static_cast<int>(size % k_));
            for (std::size_t id : cells[c]) cells_of_[id].push_back(c);
        }
        counts_.assign(cells.size() * k_, 0);
        at_ceiling_.assign(cells.size(), 0);
        colors_.assign(n_, 0);
    }

    std::optional<Coloring> run() {
        if (n_ == 0) return Coloring{};
        if (!place(0, 1)) return std::nullopt;
        if (!search(1)) return std::nullopt;
        Coloring result;
        result.colors = colors_;
        return result;
    }

private:
    // Assign and update the cells; on a violation undo and report false.
    bool place(std::size_t box, int color) {
        const auto c = static_cast<std::size_t>(color - 1);
        std::size_t done = 0;
        bool ok = true;
        for (; done < cells_of_[box].size(); ++done) {
            const std::size_t cell = cells_of_[box][done];
            int& cnt = counts_[cell * k_ + c];
            ++cnt;
            const int ceiling = floor_[cell] + (extra_[cell] > 0 ? 1 : 0);
            if (cnt > ceiling) {
                ok = false;
            } else if (extra_[cell] > 0 && cnt == ceiling && ++at_ceiling_[cell] > extra_[cell]) {
                ok = false;
            }
            if (!ok) {
                ++done;
                break;
            }
        }
        if (!ok) {
            unplace(box, color, done);
            return false;
        }
        colors_[box] = color;
        return true;
    }

    void unplace(std::size_t box, int color, std::size_t upto) {
        const auto c = static_cast<std::size_t>(color - 1);
        for (std::size_t t = 0; t < upto; ++t) {
            const std::size_t cell = cells_of_[box][t];
            int& cnt = counts_[cell * k_ + c];
            const int ceiling = floor_[cell] + (extra_[cell] > 0 ? 1 : 0);
            if (extra_[cell] > 0 && cnt == ceiling) --at_ceiling_[cell];
            --cnt;
        }
        colors_[box] = 0;
    }

    bool search(std::size_t box) {
        if (box == n_) return true;
        for (int color = 1; color <= static_cast<int>(k_); ++color) {
            if (++nodes_ > node_limit_) throw InputError("box search exceeded its node limit");
            if (!place(box, color)) continue;
            if (search(box + 1)) return true;
            unplace(box, color, cells_of_[box].size());
        }
        return false;
    }

    std::size_t n_;
    std::size_t k_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::size_t>> cells_of_;
    std::vector<int> floor_, extra_;
    std::vector<int> counts_;
    std::vector<int> at_ceiling_;
    std::vector<int> colors_;
};

}  // namespace

std::optional<Coloring> decide_balanced_boxes(const BoxInstance& instance, std::size_t max_boxes,
                                              std::uint64_t node_limit) {
    instance.validate();
    if (instance.size() > max_boxes)
        throw InputError("box instance has " + std::to_string(instance.size()) + " boxes; the exhaustive decider allows " +
                         std::to_string(max_boxes));
    BoxSearch search(instance, node_limit);
    return search.run();
}

std::string boxes_to_svg(const BoxInstance& instance, const std::optional<Coloring>& coloring) {
    instance.validate();
    if (instance.d < 2) throw InputError("SVG output needs at least two dimensions");
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    for (const Box& b : instance.boxes) {
        const double bx0 = b.extent[0].first.to_double(), bx1 = b.extent[0].second.to_double();
        const double by0 = b.extent[1].first.to_double(), by1 = b.extent[1].second.to_double();
        if (first) {
            x0 = bx0, x1 = bx1, y0 = by0, y1 = by1;
            first = false;
        }
        x0 = std::min(x0, bx0), x1 = std::max(x1, bx1), y0 = std::min(y0, by0), y1 = std::max(y1, by1);
    }
    const double margin = 5;
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
    const auto fill_for = [&](const Box& b) -> std::string {
        if (coloring) return palette[static_cast<std::size_t>(coloring->colors.at(b.id) - 1) % 8];
        switch (b.tag) {
            case BoxTag::Clause: return "#d62728";
            case BoxTag::Variable: return "#1f77b4";
            case BoxTag::Crossing: return "#ff7f0e";
            case BoxTag::Cover: return "#cccccc";
            default: return "#2ca02c";
        }
    };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - margin << ' ' << -(y1 + margin) << ' '
        << (x1 - x0) + 2 * margin << ' ' << (y1 - y0) + 2 * margin << "\">\n";
    for (const Box& b : instance.boxes) {
        const double bx0 = b.extent[0].first.to_double(), bx1 = b.extent[0].second.to_double();
        const double by0 = b.extent[1].first.to_double(), by1 = b.extent[1].second.to_double();
        std::string title = b.origin;
        for (auto& ch : title)
            if (ch == '<' || ch == '>' || ch == '&' || ch == '"') ch = ' ';
        svg << "  <rect x=\"" << bx0 << "\" y=\"" << -by1 << "\" width=\"" << bx1 - bx0 << "\" height=\"" << by1 - by0
            << "\" fill=\"" << fill_for(b) << "\" fill-opacity=\"" << (b.tag == BoxTag::Cover ? 0.15 : 0.5)
            << "\" stroke=\"black\" stroke-width=\"0.2\"><title>" << b.id << ' ' << title << "</title></rect>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

// ---------------------------------------------------------------------------
// Weighted intervals

WeightedInstance reduce_partition_to_weighted(const std::vector<std::int64_t>& values) {
    for (std::int64_t v : values)
        if (v < 1) throw InputError("partition values must be positive integers");
    std::vector<std::pair<Coord, Coord>> bounds(values.size(), {Coord(0), Coord(1)});
    return {Instance(std::move(bounds), 2), values};
}

std::int64_t weighted_imbalance(const WeightedInstance& weighted, const Coloring& coloring) {
    const Instance& inst = weighted.instance;
    check_coloring(inst, coloring);
    if (weighted.weights.size() != inst.size()) throw InputError("one weight per interval required");
    if (inst.empty()) return 0;
    std::vector<std::int64_t> load(static_cast<std::size_t>(inst.k()), 0);
    std::int64_t worst = 0;
    sweep_regions(
        inst, normalize(inst),
        [&](std::size_t id) { load[static_cast<std::size_t>(coloring.colors[id] - 1)] += weighted.weights[id]; },
        [&](std::size_t id) { load[static_cast<std::size_t>(coloring.colors[id] - 1)] -= weighted.weights[id]; },
        [&](const Coord&, const Coord&, std::size_t) {
            const auto [lo, hi] = std::minmax_element(load.begin(), load.end());
            worst = std::max(worst, *hi - *lo);
        });
    return worst;
}

std::int64_t min_weighted_imbalance(const WeightedInstance& weighted) {
    const std::size_t n = weighted.instance.size();
    if (n > 24) throw InputError("exhaustive weighted search supports at most 24 intervals");
    if (n == 0) return 0;
    const auto k = static_cast<std::uint64_t>(weighted.instance.k());
    std::uint64_t space = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (space > (std::uint64_t{1} << 32) / k) throw InputError("search space too large");
        space *= k;
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    Coloring col;
    col.colors.assign(n, 1);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = n; i-- > 1;) {
            col.colors[i] = static_cast<int>(rest % k) + 1;
            rest /= k;
        }
        best = std::min(best, weighted_imbalance(weighted, col));
        if (best == 0) break;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Multiple intervals per task

GroupedInstance reduce_nae_to_multiple_intervals(const NaeFormula& formula) {
    formula.validate();
    std::vector<std::pair<Coord, Coord>> bounds;
    std::map<int, std::vector<std::size_t>> by_var;
    for (std::size_t i = 0; i < formula.clauses.size(); ++i) {
        const auto lo = static_cast<std::int64_t>(3 * i);
        for (int v : formula.clauses[i]) {
            by_var[v].push_back(bounds.size());
            bounds.emplace_back(Coord(lo), Coord(lo + 1));
        }
    }
    GroupedInstance out{Instance(std::move(bounds), 2), {}, {}};
    for (auto& [v, ids] : by_var) {
        out.groups.push_back(std::move(ids));
        out.group_variable.push_back(v);
    }
    return out;
}

std::optional<Coloring> decide_grouped(const GroupedInstance& grouped) {
    const Instance& inst = grouped.instance;
    const std::size_t g = grouped.groups.size();
    if (g > 24) throw InputError("exhaustive group search supports at most 24 groups");
    std::vector<int> seen(inst.size(), 0);
    for (const auto& group : grouped.groups)
        for (std::size_t id : group) {
            if (id >= inst.size()) throw InputError("group refers to a missing interval");
            ++seen[id];
        }
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (seen[i] != 1) throw InputError("every interval must belong to exactly one group");

    const auto k = static_cast<std::uint64_t>(inst.k());
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < g; ++i) {
        if (space > (std::uint64_t{1} << 32) / k) throw InputError("search space too large");
        space *= k;
    }
    Coloring col;
    col.colors.assign(inst.size(), 1);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t t = g; t-- > 0;) {
            const int c = static_cast<int>(rest % k) + 1;
            rest /= k;
            for (std::size_t id : grouped.groups[t]) col.colors[id] = c;
        }
        if (is_balanced(inst, col)) return col;
    }
    return std::nullopt;
}

}  // namespace balcol
