// Parallel vs serial exhaustive kernels, and k_color scaling under two
// endpoint distributions.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "balcol/core.hpp"
#include "balcol/hardness.hpp"
#include "balcol/k_color.hpp"

using namespace balcol;
using Clock = std::chrono::steady_clock;

namespace {

double median_seconds(int reps, const std::function<void()>& body) {
    std::vector<double> t;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        body();
        t.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

Instance oracle_instance(std::size_t n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pos(0, 20), len(0, 12);
    std::vector<std::pair<Coord, Coord>> b;
    for (std::size_t i = 0; i < n; ++i) {
        const int s = pos(rng);
        b.emplace_back(s, s + len(rng));
    }
    return Instance(std::move(b), k);
}

// No assignment satisfies (x1,x1,x1), so both searches scan everything.
NaeFormula unsat_formula(int vars, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    NaeFormula f{vars, {}};
    std::uniform_int_distribution<int> v(1, vars);
    for (int c = 0; c < 4 * vars; ++c) f.clauses.push_back({v(rng), v(rng), v(rng)});
    f.clauses.push_back({1, 1, 1});
    return f;
}

Instance uniform_endpoints(std::size_t n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pos(0, 1'000'000);
    std::vector<std::pair<Coord, Coord>> b;
    for (std::size_t i = 0; i < n; ++i) {
        auto a = pos(rng), c = pos(rng);
        if (c < a) std::swap(a, c);
        b.emplace_back(a, c);
    }
    return Instance(std::move(b), k);
}

Instance constant_depth(std::size_t n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> start(0, 10 * static_cast<std::int64_t>(n) - 1), len(0, 1000);
    std::vector<std::pair<Coord, Coord>> b;
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = start(rng);
        b.emplace_back(s, s + len(rng));
    }
    return Instance(std::move(b), k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balcol benchmarks"};
    int reps = 3;
    bool quick = false;
    app.add_option("--reps", reps, "repetitions per measurement (median reported)");
    app.add_flag("--quick", quick, "smaller sizes");
    CLI11_PARSE(app, argc, argv);

    std::printf("%-28s %10s %10s %8s\n", "exhaustive kernel", "serial s", "parallel s", "speedup");
    for (std::size_t n : quick ? std::vector<std::size_t>{9, 10} : std::vector<std::size_t>{10, 11, 12}) {
        const auto inst = oracle_instance(n, 3, n);
        OracleResult a, b;
        const double ts = median_seconds(reps, [&] { a = min_imbalance_oracle_serial(inst); });
        const double tp = median_seconds(reps, [&] { b = min_imbalance_oracle(inst); });
        if (a.value != b.value || !(a.coloring == b.coloring)) std::printf("  MISMATCH in oracle results\n");
        char label[64];
        std::snprintf(label, sizeof label, "oracle n=%zu k=3", n);
        std::printf("%-28s %10.4f %10.4f %8.2f\n", label, ts, tp, ts / tp);
    }
    for (int vars : quick ? std::vector<int>{16, 18} : std::vector<int>{18, 20, 22}) {
        const auto f = unsat_formula(vars, static_cast<std::uint64_t>(vars));
        std::optional<std::vector<bool>> a, b;
        const double ts = median_seconds(reps, [&] { a = nae_brute_force_serial(f); });
        const double tp = median_seconds(reps, [&] { b = nae_brute_force(f); });
        if (a.has_value() != b.has_value()) std::printf("  MISMATCH in NAE results\n");
        char label[64];
        std::snprintf(label, sizeof label, "NAE brute force %d vars", vars);
        std::printf("%-28s %10.4f %10.4f %8.2f\n", label, ts, tp, ts / tp);
    }

    std::printf("\n%-18s %10s %12s %12s\n", "k_color, k=8", "n", "median s", "vs n/2");
    const std::vector<std::size_t> sizes =
        quick ? std::vector<std::size_t>{50'000, 100'000} : std::vector<std::size_t>{100'000, 200'000, 400'000, 800'000};
    for (const auto& [name, make] : std::vector<std::pair<const char*, Instance (*)(std::size_t, int, std::uint64_t)>>{
             {"constant depth", constant_depth}, {"uniform [0,1e6]", uniform_endpoints}}) {
        double prev = 0;
        for (std::size_t n : sizes) {
            const auto inst = make(n, 8, n);
            const double t = median_seconds(reps, [&] { (void)k_color(inst); });
            if (prev > 0) {
                std::printf("%-18s %10zu %12.4f %12.2f\n", name, n, t, t / prev);
            } else {
                std::printf("%-18s %10zu %12.4f %12s\n", name, n, t, "-");
            }
            prev = t;
        }
    }
    return 0;
}
