// Benchmark for the inner-cyclic enumeration kernel: serial reference
// against the OpenMP scan, on synthetic combinatorics of growing size.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "arrangis/enumerate.hpp"

using namespace arrangis;

namespace {

// Random valid combinatorics: pick disjoint triples greedily, cover the
// remaining pairs as double points.
Combinatorics random_combinatorics(int lines, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Combinatorics c;
    for (int i = 0; i < lines; ++i) c.lines.push_back("L" + std::to_string(i));
    std::set<std::pair<int, int>> uncovered;
    for (int i = 0; i < lines; ++i)
        for (int j = i + 1; j < lines; ++j) uncovered.insert({i, j});
    std::uniform_int_distribution<int> pick(0, lines - 1);
    for (int attempt = 0; attempt < lines * lines; ++attempt) {
        int a = pick(rng), b = pick(rng), d = pick(rng);
        if (a == b || a == d || b == d) continue;
        std::vector<int> m{a, b, d};
        std::sort(m.begin(), m.end());
        if (!uncovered.count({m[0], m[1]}) || !uncovered.count({m[0], m[2]}) ||
            !uncovered.count({m[1], m[2]}))
            continue;
        uncovered.erase({m[0], m[1]});
        uncovered.erase({m[0], m[2]});
        uncovered.erase({m[1], m[2]});
        c.points.push_back(m);
    }
    for (const auto& [i, j] : uncovered) c.points.push_back({i, j});
    return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Extended MacLane: the 8 nonzero vectors of the plane over F_3 plus a
// ninth line through two of the triple points.
Combinatorics extended_maclane() {
    Combinatorics c;
    for (int i = 0; i <= 8; ++i) c.lines.push_back("L" + std::to_string(i));
    c.points = {{0, 1, 2, 3}, {0, 4, 7, 8}, {0, 5}, {0, 6}, {1, 6, 7}, {3, 5, 8},
                {2, 5, 7},    {3, 4, 6},    {2, 6, 8}, {1, 4, 5}, {5, 6}, {2, 4}, {1, 8}, {3, 7}};
    return c;
}

void run_case(const std::string& name, const Combinatorics& c, unsigned order) {
    const std::uint64_t cap = 100'000'000ULL;
    const std::uint64_t candidates = enumeration_candidate_count(c, order, cap);

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = enumerate_inner_cyclic_serial(c, order, cap);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = enumerate_inner_cyclic_parallel(c, order, cap);
    const double tp = seconds_since(t0);

    if (serial != parallel) {
        std::printf("MISMATCH between serial and parallel results on %s\n", name.c_str());
        std::exit(1);
    }
    std::printf("%-14s %-6u %-12llu %-10.3f %-10.3f %-8.2f %zu\n", name.c_str(), order,
                static_cast<unsigned long long>(candidates), ts, tp, ts / (tp > 0 ? tp : 1e-9),
                serial.size());
}

}  // namespace

int main() {
    std::printf("%-14s %-6s %-12s %-10s %-10s %-8s %s\n", "case", "order", "candidates", "serial[s]",
                "openmp[s]", "speedup", "hits");
    run_case("maclane+", extended_maclane(), 3);
    run_case("maclane+", extended_maclane(), 6);
    for (const auto& [lines, order] : {std::pair{8, 3}, {9, 3}, {8, 4}, {10, 3}, {9, 4}})
        run_case("random" + std::to_string(lines), random_combinatorics(lines, 42), order);
    return 0;
}
