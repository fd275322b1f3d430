#include "balcol/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "balcol/errors.hpp"

namespace balcol::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool looks_like_json(std::string_view text) {
    const auto t = trim(text);
    return !t.empty() && (t.front() == '{' || t.front() == '[');
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

// Lines with comments removed; keeps 1-based line numbers for diagnostics.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text, char comment) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++number;
        if (const auto pos = line.find(comment); pos != std::string::npos) line.erase(pos);
        if (!trim(line).empty()) lines.emplace_back(number, line);
    }
    return lines;
}

long parse_int(const std::string& word, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(word, &used);
        if (used == word.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("line " + std::to_string(line) + ": expected " + what + ", got '" + word + "'");
}

int json_k(const json& doc, std::optional<int> k, int fallback) {
    if (k) return *k;
    if (doc.contains("k")) {
        if (!doc["k"].is_number_integer()) throw InputError("\"k\" must be an integer");
        return doc["k"].get<int>();
    }
    return fallback;
}

std::pair<Coord, Coord> coord_pair(const json& item, const std::string& where) {
    if (!item.is_array() || item.size() != 2) throw InputError(where + " must be a [lo, hi] pair");
    return {coord_from_json(item[0]), coord_from_json(item[1])};
}

}  // namespace

Coord coord_from_json(const json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            return Coord::parse(std::to_string(value.get<std::uint64_t>()));
        return Coord(value.get<std::int64_t>());
    }
    if (value.is_number_float()) return Coord::from_double(value.get<double>());
    if (value.is_string()) return Coord::parse(value.get<std::string>());
    throw InputError("coordinate must be a number or a string, got " + value.dump());
}

json coord_to_json(const Coord& c) {
    if (c.is_integer() && mpz_fits_slong_p(c.value().get_num_mpz_t())) return c.value().get_num().get_si();
    return c.to_string();
}

Instance parse_instance(std::string_view text, std::optional<int> k) {
    if (looks_like_json(text)) {
        const json doc = parse_json(text);
        if (!doc.is_object()) throw InputError("instance JSON must be an object");
        std::vector<std::pair<Coord, Coord>> bounds;
        if (doc.contains("intervals")) {
            const json& list = doc["intervals"];
            if (!list.is_array()) throw InputError("\"intervals\" must be an array");
            for (std::size_t i = 0; i < list.size(); ++i) bounds.push_back(coord_pair(list[i], "interval " + std::to_string(i)));
        }
        return Instance(std::move(bounds), json_k(doc, k, 2));
    }

    const auto lines = content_lines(text, '#');
    if (lines.empty()) return Instance({}, k.value_or(2));
    const auto header = split_words(lines[0].second);
    if (header.empty() || header.size() > 2)
        throw InputError("line " + std::to_string(lines[0].first) + ": expected header 'n k'");
    const long n = parse_int(header[0], lines[0].first, "interval count");
    if (n < 0) throw InputError("line " + std::to_string(lines[0].first) + ": negative interval count");
    const int file_k = header.size() == 2 ? static_cast<int>(parse_int(header[1], lines[0].first, "k")) : 2;
    if (static_cast<long>(lines.size()) - 1 != n)
        throw InputError("header announces " + std::to_string(n) + " intervals, found " + std::to_string(lines.size() - 1));
    std::vector<std::pair<Coord, Coord>> bounds;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, line] = lines[i];
        const auto words = split_words(line);
        if (words.size() != 2)
            throw InputError("line " + std::to_string(number) + ": expected 'lo hi', got '" + std::string(trim(line)) + "'");
        try {
            bounds.emplace_back(Coord::parse(words[0]), Coord::parse(words[1]));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return Instance(std::move(bounds), k.value_or(file_k));
}

json instance_to_json(const Instance& instance) {
    json out;
    out["k"] = instance.k();
    out["intervals"] = json::array();
    for (const Interval& iv : instance.intervals()) out["intervals"].push_back({coord_to_json(iv.lo), coord_to_json(iv.hi)});
    return out;
}

Coloring parse_coloring(std::string_view text) {
    Coloring coloring;
    if (looks_like_json(text)) {
        const json doc = parse_json(text);
        const json& list = doc.is_object() ? doc.value("colors", json::array()) : doc;
        if (!list.is_array()) throw InputError("\"colors\" must be an array");
        for (const auto& c : list) {
            if (!c.is_number_integer()) throw InputError("colors must be integers");
            coloring.colors.push_back(c.get<int>());
        }
        return coloring;
    }
    for (const auto& [number, line] : content_lines(text, '#'))
        for (const auto& w : split_words(line)) coloring.colors.push_back(static_cast<int>(parse_int(w, number, "color")));
    return coloring;
}

json coloring_to_json(const Coloring& coloring, int imbalance) {
    json out;
    out["colors"] = coloring.colors;
    out["imbalance"] = imbalance;
    return out;
}

ArcInstance parse_arcs(std::string_view text, std::optional<int> k) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("circumference")) throw InputError("arc JSON needs \"circumference\"");
    std::vector<std::pair<Coord, Coord>> arcs;
    if (doc.contains("arcs")) {
        const json& list = doc["arcs"];
        if (!list.is_array()) throw InputError("\"arcs\" must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) arcs.push_back(coord_pair(list[i], "arc " + std::to_string(i)));
    }
    return ArcInstance(std::move(arcs), coord_from_json(doc["circumference"]), json_k(doc, k, 2));
}

NaeFormula parse_formula(std::string_view text) {
    NaeFormula formula;
    bool have_header = false;
    long expected_clauses = 0;
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++number;
        const auto words = split_words(line);
        if (words.empty() || words[0] == "c") continue;
        if (words[0] == "p") {
            if (words.size() != 4 || words[1] != "nae")
                throw InputError("line " + std::to_string(number) + ": expected 'p nae <vars> <clauses>'");
            formula.num_vars = static_cast<int>(parse_int(words[2], number, "variable count"));
            expected_clauses = parse_int(words[3], number, "clause count");
            have_header = true;
            continue;
        }
        if (!have_header) throw InputError("line " + std::to_string(number) + ": clause before the 'p nae' header");
        auto lits = words;
        if (lits.size() == 4 && lits[3] == "0") lits.pop_back();
        if (lits.size() != 3)
            throw InputError("line " + std::to_string(number) + ": expected three variables per clause");
        std::array<int, 3> clause{};
        for (std::size_t j = 0; j < 3; ++j) {
            const long v = parse_int(lits[j], number, "variable");
            if (v < 1) throw InputError("line " + std::to_string(number) + ": only positive literals are allowed");
            clause[j] = static_cast<int>(v);
        }
        formula.clauses.push_back(clause);
    }
    if (!have_header) throw InputError("missing 'p nae <vars> <clauses>' header");
    if (static_cast<long>(formula.clauses.size()) != expected_clauses)
        throw InputError("header announces " + std::to_string(expected_clauses) + " clauses, found " +
                         std::to_string(formula.clauses.size()));
    formula.validate();
    return formula;
}

BinaryMatrix parse_matrix(std::string_view text) {
    const auto lines = content_lines(text, '#');
    if (lines.empty()) throw InputError("empty matrix file");
    const auto header = split_words(lines[0].second);
    if (header.size() != 2) throw InputError("line " + std::to_string(lines[0].first) + ": expected header 'rows cols'");
    const long rows = parse_int(header[0], lines[0].first, "row count");
    const long cols = parse_int(header[1], lines[0].first, "column count");
    if (rows < 0 || cols < 0) throw InputError("negative matrix size");
    if (static_cast<long>(lines.size()) - 1 != rows)
        throw InputError("header announces " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1));
    BinaryMatrix m;
    m.rows = static_cast<std::size_t>(rows);
    m.cols = static_cast<std::size_t>(cols);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& [number, line] = lines[r];
        std::size_t seen = 0;
        for (char ch : line) {
            if (ch == '0' || ch == '1') {
                m.cells.push_back(static_cast<std::uint8_t>(ch - '0'));
                ++seen;
            } else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') {
                throw InputError("line " + std::to_string(number) + ": unexpected character '" + std::string(1, ch) + "'");
            }
        }
        if (seen != m.cols)
            throw InputError("line " + std::to_string(number) + ": expected " + std::to_string(m.cols) + " entries, got " +
                             std::to_string(seen));
    }
    return m;
}

BoxInstance parse_boxes(std::string_view text, std::optional<int> k) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("boxes")) throw InputError("box JSON needs \"boxes\"");
    BoxInstance out;
    out.k = json_k(doc, k, 2);
    const json& list = doc["boxes"];
    if (!list.is_array()) throw InputError("\"boxes\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const json& item = list[i];
        const json& extent = item.is_object() ? item.at("extent") : item;
        if (!extent.is_array()) throw InputError("box " + std::to_string(i) + " extent must be an array");
        Box b;
        b.id = i;
        for (std::size_t j = 0; j < extent.size(); ++j)
            b.extent.push_back(coord_pair(extent[j], "box " + std::to_string(i) + " dimension " + std::to_string(j)));
        if (item.is_object()) {
            const std::string tag = item.value("tag", "plain");
            for (BoxTag t : {BoxTag::Clause, BoxTag::Variable, BoxTag::Chain, BoxTag::Crossing, BoxTag::Cover, BoxTag::Plain})
                if (to_string(t) == tag) b.tag = t;
            b.origin = item.value("origin", "");
        }
        out.boxes.push_back(std::move(b));
    }
    if (doc.contains("d")) {
        out.d = doc["d"].get<std::size_t>();
    } else {
        out.d = out.boxes.empty() ? 2 : out.boxes.front().extent.size();
    }
    out.validate();
    return out;
}

json boxes_to_json(const BoxInstance& instance) {
    json out;
    out["d"] = instance.d;
    out["k"] = instance.k;
    out["boxes"] = json::array();
    for (const Box& b : instance.boxes) {
        json box;
        box["id"] = b.id;
        box["tag"] = to_string(b.tag);
        box["origin"] = b.origin;
        box["extent"] = json::array();
        for (const auto& [lo, hi] : b.extent) box["extent"].push_back({coord_to_json(lo), coord_to_json(hi)});
        out["boxes"].push_back(std::move(box));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace balcol::io
