#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balcol/arcs.hpp"
#include "balcol/core.hpp"
#include "balcol/errors.hpp"
#include "balcol/hardness.hpp"
#include "balcol/io.hpp"
#include "balcol/k_color.hpp"
#include "balcol/online.hpp"
#include "balcol/two_color.hpp"

namespace {

using balcol::io::json;

enum Exit : int { Ok = 0, Negative = 1, BadInput = 2, Internal = 3 };

std::optional<int> opt_k(int k) { return k > 0 ? std::optional<int>(k) : std::nullopt; }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_color(const std::string& input, int k, const std::string& algorithm, const std::string& format) {
    const auto instance = balcol::io::parse_instance(balcol::io::read_file(input), opt_k(k));
    balcol::Coloring coloring;
    if (algorithm == "sweep") {
        coloring = instance.k() == 2 ? balcol::two_color(instance) : balcol::k_color(instance);
    } else {
        coloring = balcol::k_color_dewerra(instance).coloring;
    }
    const int value = balcol::imbalance(instance, coloring).value;
    if (value > 1) throw balcol::InternalError("produced coloring has imbalance " + std::to_string(value));
    if (format == "text") {
        for (std::size_t i = 0; i < coloring.size(); ++i) std::cout << (i ? " " : "") << coloring.colors[i];
        std::cout << "\n# imbalance " << value << '\n';
    } else {
        emit(balcol::io::coloring_to_json(coloring, value));
    }
    return Ok;
}

int cmd_verify(const std::string& input, const std::string& coloring_file, int k, const std::string& format) {
    const auto instance = balcol::io::parse_instance(balcol::io::read_file(input), opt_k(k));
    const auto coloring = balcol::io::parse_coloring(balcol::io::read_file(coloring_file));
    const auto report = balcol::imbalance(instance, coloring);
    const bool balanced = report.value <= 1;
    if (format == "text") {
        std::cout << "imbalance " << report.value << " at " << report.witness.to_string() << '\n';
    } else {
        json out;
        out["imbalance"] = report.value;
        out["witness"] = report.witness.to_string();
        out["balanced"] = balanced;
        emit(out);
    }
    return balanced ? Ok : Negative;
}

int cmd_oracle(const std::string& input, int k, std::size_t limit) {
    const auto instance = balcol::io::parse_instance(balcol::io::read_file(input), opt_k(k));
    const auto result = balcol::min_imbalance_oracle(instance, limit);
    json out;
    out["value"] = result.value;
    out["colors"] = result.coloring.colors;
    out["divisibility_predicts_zero"] = balcol::divisibility_predicts_zero(instance);
    emit(out);
    return Ok;
}

int cmd_arcs(const std::string& input, int k, const std::string& mapping, bool with_oracle, std::size_t limit) {
    const auto arcs = balcol::io::parse_arcs(balcol::io::read_file(input), opt_k(k));
    const auto map = mapping == "hull" ? balcol::FullArcMapping::SpanHull : balcol::FullArcMapping::Period;
    const auto coloring = balcol::arc_color(arcs, map);
    const auto report = balcol::arc_imbalance(arcs, coloring);
    json out = balcol::io::coloring_to_json(coloring, report.value);
    out["witness"] = report.witness.to_string();
    if (with_oracle) out["oracle"] = balcol::min_arc_imbalance_oracle(arcs, limit).value;
    emit(out);
    return Ok;
}

json interval_json(const balcol::Coord& lo, const balcol::Coord& hi) {
    return json::array({balcol::io::coord_to_json(lo), balcol::io::coord_to_json(hi)});
}

// Starts sorted, lengths up to a quarter of the span; integer endpoints.
balcol::Instance random_stream(int rounds, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::int64_t span = 4 * static_cast<std::int64_t>(rounds) + 4;
    std::vector<std::int64_t> starts;
    for (int i = 0; i < rounds; ++i) starts.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span)));
    std::sort(starts.begin(), starts.end());
    std::vector<std::pair<balcol::Coord, balcol::Coord>> bounds;
    for (const auto s : starts)
        bounds.emplace_back(s, s + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span / 4 + 1)));
    return balcol::Instance(std::move(bounds), k);
}

int cmd_online(const std::string& algorithm, int k, int rounds, std::uint64_t seed, bool adversary,
               const std::string& input, int budget) {
    if (rounds < 1) throw balcol::InputError("--rounds must be at least 1");
    if (k < 1) throw balcol::InputError("--k must be at least 1");
    auto alg = balcol::make_algorithm(algorithm, seed);

    if (adversary) {
        const auto t = balcol::adversary_general(*alg, k, rounds, budget >= 0 ? std::optional<int>(budget) : std::nullopt);
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const auto& s = t.steps[i];
            json line;
            line["step"] = i;
            line["interval"] = interval_json(s.lo, s.hi);
            line["color"] = s.color;
            line["tracked"] = s.tracked;
            line["simb_left"] = s.simb_left;
            line["simb_right"] = s.simb_right;
            line["imbalance"] = s.imbalance;
            emit(line);
        }
        const int bound = (rounds + 2) / 3;
        json summary;
        summary["algorithm"] = alg->name();
        summary["k"] = k;
        summary["rounds"] = t.rounds;
        summary["presentations"] = t.steps.size();
        summary["plus"] = t.plus;
        summary["minus"] = t.minus;
        summary["stalled"] = t.stalled;
        summary["final_imbalance"] = t.final_imbalance();
        if (k == 2) summary["bound"] = bound;
        emit(summary);
        if (k == 2 && t.final_imbalance() < bound)
            throw balcol::InternalError("adversary reached imbalance " + std::to_string(t.final_imbalance()) +
                                        ", below " + std::to_string(bound));
        return Ok;
    }

    balcol::Instance stream = input.empty() ? random_stream(rounds, k, seed)
                                            : balcol::io::parse_instance(balcol::io::read_file(input), k);
    if (static_cast<std::size_t>(rounds) < stream.size()) {
        std::vector<std::size_t> first(static_cast<std::size_t>(rounds));
        for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
        stream = stream.subset(first, k);
    }
    const auto run = balcol::run_online(*alg, stream);
    for (std::size_t i = 0; i < stream.size(); ++i) {
        json line;
        line["step"] = i;
        line["interval"] = interval_json(stream[i].lo, stream[i].hi);
        line["color"] = run.coloring.colors[i];
        line["imbalance"] = run.imbalance[i];
        emit(line);
    }
    json summary;
    summary["algorithm"] = alg->name();
    summary["k"] = k;
    summary["presentations"] = stream.size();
    summary["final_imbalance"] = run.imbalance.empty() ? 0 : run.imbalance.back();
    emit(summary);
    return Ok;
}

int cmd_reduce_nae(const std::string& input, int k, std::size_t lift, const std::string& svg, bool audit) {
    const auto formula = balcol::io::parse_formula(balcol::io::read_file(input));
    auto boxes = balcol::reduce_nae_to_boxes(formula, k);
    if (audit) {
        const auto report = balcol::audit_reduction(boxes);
        for (const auto& p : report.problems) std::cerr << "audit: " << p << '\n';
        if (!report.ok) throw balcol::InternalError("reduction audit failed");
    }
    if (!svg.empty()) {
        std::ofstream out(svg, std::ios::binary);
        if (!out) throw balcol::InputError("cannot write '" + svg + "'");
        out << balcol::boxes_to_svg(boxes);
    }
    if (lift > boxes.d) boxes = balcol::lift_boxes(boxes, lift);
    emit(balcol::io::boxes_to_json(boxes));
    return Ok;
}

std::vector<std::int64_t> parse_values(const std::string& text) {
    std::vector<std::int64_t> values;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw balcol::InputError("bad value '" + item + "' in --values");
        }
    }
    return values;
}

int cmd_reduce_partition(const std::string& values_text, bool solve) {
    const auto weighted = balcol::reduce_partition_to_weighted(parse_values(values_text));
    json out = balcol::io::instance_to_json(weighted.instance);
    out["weights"] = weighted.weights;
    if (solve) out["min_weighted_imbalance"] = balcol::min_weighted_imbalance(weighted);
    emit(out);
    return Ok;
}

int cmd_reduce_multi(const std::string& input, bool solve) {
    const auto formula = balcol::io::parse_formula(balcol::io::read_file(input));
    const auto grouped = balcol::reduce_nae_to_multiple_intervals(formula);
    json out = balcol::io::instance_to_json(grouped.instance);
    out["groups"] = grouped.groups;
    out["group_variable"] = grouped.group_variable;
    if (solve) {
        const auto found = balcol::decide_grouped(grouped);
        out["balanced"] = found.has_value();
        if (found) out["colors"] = found->colors;
    }
    emit(out);
    return Ok;
}

int cmd_decide_boxes(const std::string& input, int k, std::size_t max_boxes) {
    const auto boxes = balcol::io::parse_boxes(balcol::io::read_file(input), opt_k(k));
    const auto found = balcol::decide_balanced_boxes(boxes, max_boxes);
    json out;
    out["balanced"] = found.has_value();
    if (found) {
        out["colors"] = found->colors;
        out["imbalance"] = balcol::box_imbalance(boxes, *found).value;
    }
    emit(out);
    return found ? Ok : Negative;
}

int cmd_hypergraph(const std::string& input, int k) {
    if (k < 1) throw balcol::InputError("--k must be at least 1");
    const auto matrix = balcol::io::parse_matrix(balcol::io::read_file(input));
    const auto instance = balcol::hypergraph_to_instance(matrix, k);
    auto coloring = balcol::k_color(instance);
    const int spread = balcol::column_imbalance(matrix, coloring, k);
    if (spread > 1) throw balcol::InternalError("column imbalance " + std::to_string(spread));
    json out;
    out["colors"] = coloring.colors;
    out["column_imbalance"] = spread;
    emit(out);
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced interval coloring toolkit"};
    app.require_subcommand(1);
    int result = Ok;

    std::string input;
    std::string coloring_file;
    std::string algorithm = "sweep";
    std::string format = "json";
    int k = 0;
    std::size_t limit = 12;

    auto* color = app.add_subcommand("color", "Balanced k-coloring of an interval file");
    color->add_option("--input", input, "instance file (JSON or text)")->required();
    color->add_option("--k", k, "number of colors (overrides the file)");
    color->add_option("--algorithm", algorithm)->check(CLI::IsMember({"sweep", "dewerra"}));
    color->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    color->callback([&] { result = cmd_color(input, k, algorithm, format); });

    auto* verify = app.add_subcommand("verify", "Imbalance of a given coloring; exit 1 if above 1");
    verify->add_option("--input", input)->required();
    verify->add_option("--coloring", coloring_file)->required();
    verify->add_option("--k", k);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify->callback([&] { result = cmd_verify(input, coloring_file, k, format); });

    auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum imbalance");
    oracle->add_option("--input", input)->required();
    oracle->add_option("--k", k);
    oracle->add_option("--limit", limit, "largest n searched");
    oracle->callback([&] { result = cmd_oracle(input, k, limit); });

    std::string mapping = "period";
    bool with_oracle = false;
    auto* arcs = app.add_subcommand("arcs", "Coloring of circular arcs");
    arcs->add_option("--input", input)->required();
    arcs->add_option("--k", k);
    arcs->add_option("--mapping", mapping)->check(CLI::IsMember({"period", "hull"}));
    arcs->add_flag("--oracle", with_oracle, "also report the exhaustive minimum");
    arcs->add_option("--limit", limit);
    arcs->callback([&] { result = cmd_arcs(input, k, mapping, with_oracle, limit); });

    std::string online_alg;
    int rounds = 0;
    std::uint64_t seed = 0;
    bool adversary = false;
    int budget = -1;
    int online_k = 2;
    auto* online = app.add_subcommand("online", "Online coloring transcript as JSON lines");
    online->add_option("--algorithm", online_alg, "round_robin | greedy | seeded_random | fixed_<c>")->required();
    online->add_option("--k", online_k);
    online->add_option("--rounds", rounds)->required();
    online->add_option("--seed", seed);
    online->add_flag("--adversary", adversary);
    online->add_option("--budget", budget, "retries per round for off-track colors");
    online->add_option("--input", input, "interval stream sorted by start");
    online->callback([&] { result = cmd_online(online_alg, online_k, rounds, seed, adversary, input, budget); });

    auto* reduce = app.add_subcommand("reduce", "Hardness reductions");
    reduce->require_subcommand(1);
    std::size_t lift = 2;
    std::string svg;
    bool audit = false;
    int reduce_k = 2;
    auto* nae = reduce->add_subcommand("nae3sat", "NAE-3SAT formula to rectangles");
    nae->add_option("--input", input)->required();
    nae->add_option("--k", reduce_k);
    nae->add_option("--dim", lift, "pad boxes to this many dimensions");
    nae->add_option("--svg", svg, "also write a drawing");
    nae->add_flag("--audit", audit, "check the intersection pattern first");
    nae->callback([&] { result = cmd_reduce_nae(input, reduce_k, lift, svg, audit); });

    std::string values;
    bool solve = false;
    auto* partition = reduce->add_subcommand("partition", "Partition values to weighted intervals");
    partition->add_option("--values", values, "comma separated integers")->required();
    partition->add_flag("--solve", solve);
    partition->callback([&] { result = cmd_reduce_partition(values, solve); });

    auto* multi = reduce->add_subcommand("multiple-intervals", "NAE-3SAT formula to grouped intervals");
    multi->add_option("--input", input)->required();
    multi->add_flag("--solve", solve);
    multi->callback([&] { result = cmd_reduce_multi(input, solve); });

    std::size_t max_boxes = 512;
    auto* decide = app.add_subcommand("decide-boxes", "Search for a balanced box coloring; exit 1 if none");
    decide->add_option("--input", input)->required();
    decide->add_option("--k", k);
    decide->add_option("--max-boxes", max_boxes);
    decide->callback([&] { result = cmd_decide_boxes(input, k, max_boxes); });

    int hyper_k = 2;
    auto* hyper = app.add_subcommand("hypergraph", "Balanced coloring of a consecutive-ones matrix");
    hyper->add_option("--input", input)->required();
    hyper->add_option("--k", hyper_k);
    hyper->callback([&] { result = cmd_hypergraph(input, hyper_k); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    } catch (const balcol::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const balcol::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    }
    return result;
}
