#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "balcol/arcs.hpp"
#include "balcol/core.hpp"
#include "balcol/hardness.hpp"
#include "balcol/k_color.hpp"

namespace balcol::io {

using json = nlohmann::ordered_json;

/// JSON numbers go through their shortest decimal form, strings are parsed
/// exactly ("0.1", "1/3").
Coord coord_from_json(const json& value);
/// Integers as numbers, everything else as an exact string.
json coord_to_json(const Coord& c);

/// JSON `{"k": .., "intervals": [[lo, hi], ...]}` or text `n k` followed by
/// n lines `lo hi` (`#` starts a comment). Empty text is the empty instance.
/// `k` overrides the file; without either k defaults to 2.
Instance parse_instance(std::string_view text, std::optional<int> k = std::nullopt);
json instance_to_json(const Instance& instance);

/// JSON `{"colors": [...]}` or whitespace separated integers.
Coloring parse_coloring(std::string_view text);
json coloring_to_json(const Coloring& coloring, int imbalance);

/// `{"k": .., "circumference": .., "arcs": [[start, length], ...]}`
ArcInstance parse_arcs(std::string_view text, std::optional<int> k = std::nullopt);

/// `c` comment lines, `p nae <vars> <clauses>`, then one triple per line
/// (a trailing 0 is accepted).
NaeFormula parse_formula(std::string_view text);

/// `rows cols` then `rows` lines of 0/1 entries (separators optional).
BinaryMatrix parse_matrix(std::string_view text);

/// `{"d": 2, "k": 2, "boxes": [{"extent": [[lo, hi], ...], "tag": .., "origin": ..}, ...]}`;
/// a box may also be given as a bare extent list.
BoxInstance parse_boxes(std::string_view text, std::optional<int> k = std::nullopt);
json boxes_to_json(const BoxInstance& instance);

std::string read_file(const std::string& path);

}  // namespace balcol::io
