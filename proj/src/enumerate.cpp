#include "arrangis/enumerate.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arrangis/errors.hpp"

namespace arrangis {

namespace {

// Shared per-run state; candidate evaluation below is read-only on it.
struct Scan {
    BlownUpGraph graph;
    unsigned order;
    int num_lines;
};

// Decodes a candidate index into exponent numerators (base-`order`
// digits, first line most significant) and appends the forced last digit.
void decode(const Scan& s, std::uint64_t index, std::vector<unsigned>& digits) {
    digits.assign(s.num_lines, 0);
    std::uint64_t rest = index;
    for (int i = s.num_lines - 2; i >= 0; --i) {
        digits[i] = static_cast<unsigned>(rest % s.order);
        rest /= s.order;
    }
    unsigned sum = 0;
    for (int i = 0; i < s.num_lines - 1; ++i) sum = (sum + digits[i]) % s.order;
    digits[s.num_lines - 1] = (s.order - sum) % s.order;
}

Character character_from_digits(const Scan& s, const std::vector<unsigned>& digits) {
    Character xi;
    xi.values.reserve(s.num_lines);
    for (int i = 0; i < s.num_lines; ++i)
        xi.values.push_back(RootOfUnity::from_exponent(
            Rational(static_cast<long>(digits[i]), static_cast<long>(s.order))));
    return xi;
}

bool evaluate_candidate(const Scan& s, std::uint64_t index, InnerCyclicHit& hit) {
    std::vector<unsigned> digits;
    decode(s, index, digits);
    int ones = 0;
    for (unsigned d : digits)
        if (d == 0) ++ones;
    if (ones == s.num_lines) return false;  // the trivial character is not reported
    if (ones < 2) return false;  // a cycle of unramified components needs several trivial lines
    const Character xi = character_from_digits(s, digits);
    const InnerUnramified u = inner_unramified(s.graph, xi);
    if (u.first_betti <= 0) return false;
    const SubgraphForest forest = subgraph_forest(s.graph, u);
    const auto comp_cycle = fundamental_component_cycle(s.graph, forest, forest.nontree_edges.front());
    hit.xi = xi;
    hit.witness = component_cycle_to_incidence(s.graph, comp_cycle).canonical();
    return true;
}

Scan make_scan(const Combinatorics& c, unsigned order) {
    if (order < 1) throw InputError("character order bound must be >= 1");
    Scan s{blow_up(c), order, static_cast<int>(c.lines.size())};
    if (s.num_lines < 1) throw InputError("combinatorics has no lines");
    return s;
}

}  // namespace

std::uint64_t enumeration_candidate_count(const Combinatorics& c, unsigned order, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 1; i < c.lines.size(); ++i) {
        if (total > cap / order)
            throw CapExceededError("enumeration needs more than " + std::to_string(cap) +
                                   " candidate characters");
        total *= order;
    }
    if (total > cap)
        throw CapExceededError("enumeration needs " + std::to_string(total) + " candidates, cap is " +
                               std::to_string(cap));
    return total;
}

std::vector<InnerCyclicHit> enumerate_inner_cyclic_serial(const Combinatorics& c, unsigned order,
                                                          std::uint64_t cap) {
    const Scan s = make_scan(c, order);
    const std::uint64_t total = enumeration_candidate_count(c, order, cap);
    std::vector<InnerCyclicHit> hits;
    InnerCyclicHit hit;
    for (std::uint64_t i = 0; i < total; ++i)
        if (evaluate_candidate(s, i, hit)) hits.push_back(hit);
    return hits;
}

std::vector<InnerCyclicHit> enumerate_inner_cyclic_parallel(const Combinatorics& c, unsigned order,
                                                            std::uint64_t cap) {
    const Scan s = make_scan(c, order);
    const std::uint64_t total = enumeration_candidate_count(c, order, cap);
    std::vector<std::pair<std::uint64_t, InnerCyclicHit>> tagged;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::pair<std::uint64_t, InnerCyclicHit>> local;
        InnerCyclicHit hit;
#pragma omp for schedule(dynamic, 1024) nowait
        for (long long i = 0; i < static_cast<long long>(total); ++i) {
            if (evaluate_candidate(s, static_cast<std::uint64_t>(i), hit))
                local.emplace_back(static_cast<std::uint64_t>(i), hit);
        }
#pragma omp critical
        tagged.insert(tagged.end(), local.begin(), local.end());
    }
#else
    InnerCyclicHit hit;
    for (std::uint64_t i = 0; i < total; ++i)
        if (evaluate_candidate(s, i, hit)) tagged.emplace_back(i, hit);
#endif
    // Candidate order is the output contract, independent of scheduling.
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<InnerCyclicHit> hits;
    hits.reserve(tagged.size());
    for (auto& t : tagged) hits.push_back(std::move(t.second));
    return hits;
}

std::vector<InnerCyclicHit> enumerate_inner_cyclic(const Combinatorics& c, unsigned order,
                                                   std::uint64_t cap) {
    return enumerate_inner_cyclic_parallel(c, order, cap);
}

}  // namespace arrangis
