#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "balcol/core.hpp"

namespace balcol {

/// An online coloring rule: sees each interval once, in start order, and must
/// commit to a color immediately.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;
    virtual std::string name() const = 0;
    virtual void reset(int k) = 0;
    /// `history` holds every earlier interval, `colors` the choices made for them.
    virtual int assign(const Interval& next, std::span<const Interval> history, std::span<const int> colors) = 0;
};

class RoundRobin final : public OnlineAlgorithm {
public:
    std::string name() const override { return "round_robin"; }
    void reset(int k) override;
    int assign(const Interval&, std::span<const Interval>, std::span<const int>) override;

private:
    int k_ = 1;
    int next_ = 0;
};

/// Least used color among earlier intervals that contain the new start point;
/// ties go to the lowest color.
class GreedyLeastLoaded final : public OnlineAlgorithm {
public:
    std::string name() const override { return "greedy"; }
    void reset(int k) override { k_ = k; }
    int assign(const Interval& next, std::span<const Interval> history, std::span<const int> colors) override;

private:
    int k_ = 1;
};

class SeededRandom final : public OnlineAlgorithm {
public:
    explicit SeededRandom(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::string name() const override { return "seeded_random"; }
    void reset(int k) override;
    int assign(const Interval&, std::span<const Interval>, std::span<const int>) override;

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    int k_ = 1;
};

class FixedColor final : public OnlineAlgorithm {
public:
    explicit FixedColor(int color) : color_(color) {}
    std::string name() const override { return "fixed_" + std::to_string(color_); }
    void reset(int) override {}
    int assign(const Interval&, std::span<const Interval>, std::span<const int>) override { return color_; }

private:
    int color_;
};

/// round_robin | greedy (alias greedy_least_loaded) | seeded_random (alias
/// random) | fixed_<c>. Throws InputError for anything else.
std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, std::uint64_t seed = 0);

struct OnlineRun {
    Coloring coloring;
    std::vector<int> imbalance;  // imbalance of the prefix after each step
};

/// Feeds the intervals in order. Throws InputError if start points decrease
/// or the algorithm answers outside 1..k.
OnlineRun run_online(OnlineAlgorithm& alg, const Instance& stream);

/// Imbalance of intervals 0..j for every j, by an incremental sweep over the
/// arrangement of all endpoints.
std::vector<int> prefix_imbalances(const Instance& instance, const Coloring& coloring);

struct TranscriptStep {
    Coord lo;
    Coord hi;
    int color = 0;
    bool tracked = true;   // color was one of the two tracked colors
    int simb_left = 0;     // signed imbalance inside the current L
    int simb_right = 0;    // signed imbalance inside the current R
    int imbalance = 0;     // imbalance of everything presented so far
};

struct Transcript {
    int k = 2;
    std::vector<TranscriptStep> steps;
    int rounds = 0;        // presentations answered with a tracked color
    int plus = 0;          // answered with the first tracked color
    int minus = 0;         // answered with the second
    bool stalled = false;  // the repeat budget ran out
    std::pair<Coord, Coord> left, right;
    Instance instance() const;
    Coloring coloring() const;
    int final_imbalance() const { return steps.empty() ? 0 : steps.back().imbalance; }
};

/// Two-color adversary: every presented interval runs from the middle of L to
/// the middle of R; R keeps the half on the side that grows the imbalance.
Transcript adversary_k2(OnlineAlgorithm& alg, int rounds);

/// Tracks colors 1 and 2. An answer with any other color re-presents the
/// interval with a slightly larger start, at most `repeat_budget` times per
/// round (default 2 * rounds); running out of budget stops the run.
Transcript adversary_general(OnlineAlgorithm& alg, int k, int rounds, std::optional<int> repeat_budget = std::nullopt);

}  // namespace balcol
