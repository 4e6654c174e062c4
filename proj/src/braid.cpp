#include "arrangis/braid.hpp"

#include <algorithm>
#include <cstdlib>

#include "arrangis/errors.hpp"

namespace arrangis {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    for (int l : letters) {
        const int i = std::abs(l);
        if (l == 0 || i < 1 || i >= strands)
            throw InputError("braid letter " + std::to_string(l) + " out of range for " +
                             std::to_string(strands) + " strands");
    }
}

BraidWord BraidWord::inverse() const {
    BraidWord r;
    r.strands = strands;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord& BraidWord::append(const BraidWord& o) {
    if (strands != o.strands) throw InputError("cannot concatenate braids with different strand counts");
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> at(strands);  // at[pos-1] = strand id
    for (int i = 0; i < strands; ++i) at[i] = i;
    for (int l : letters) {
        const int i = std::abs(l) - 1;
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> perm(strands);
    for (int pos = 0; pos < strands; ++pos) perm[at[pos]] = pos + 1;
    return perm;
}

BraidWord half_twist(int strands, int pos, int width) {
    if (width < 2 || pos < 1 || pos + width - 1 > strands)
        throw InputError("half twist of width " + std::to_string(width) + " at position " +
                         std::to_string(pos) + " does not fit in " + std::to_string(strands) + " strands");
    BraidWord w;
    w.strands = strands;
    for (int j = 1; j < width; ++j)
        for (int k = pos + j - 1; k >= pos; --k) w.letters.push_back(k);
    return w;
}

std::vector<std::string> LabeledBraid::exit_labels() const {
    std::vector<std::string> at = entry_labels;
    for (int l : word.letters) {
        const int i = std::abs(l) - 1;
        std::swap(at[i], at[i + 1]);
    }
    return at;
}

LabeledBraid LabeledBraid::inverse() const {
    return {word.inverse(), exit_labels()};
}

LabeledBraid LabeledBraid::then(const LabeledBraid& o) const {
    if (exit_labels() != o.entry_labels) throw InputError("braid concatenation labels do not match");
    LabeledBraid r = *this;
    r.word.append(o.word);
    return r;
}

namespace {

template <typename Fn>
void walk_crossings(const LabeledBraid& braid, Fn&& fn) {
    if (static_cast<int>(braid.entry_labels.size()) != braid.word.strands)
        throw InputError("labeled braid has " + std::to_string(braid.entry_labels.size()) +
                         " labels for " + std::to_string(braid.word.strands) + " strands");
    std::vector<std::string> at = braid.entry_labels;
    for (int l : braid.word.letters) {
        const int i = std::abs(l) - 1;
        const int w = l > 0 ? 1 : -1;
        const std::string& lower = at[i];
        const std::string& upper = at[i + 1];
        const bool upper_over = (w > 0) == kUpperStrandCrossesOver;
        fn(upper_over ? upper : lower, upper_over ? lower : upper, w);
        std::swap(at[i], at[i + 1]);
    }
}

}  // namespace

int a_kl(const LabeledBraid& braid, const std::string& over, const std::string& under) {
    if (over == under) throw InputError("a_kl needs two distinct strands");
    bool seen_over = false, seen_under = false;
    for (const auto& l : braid.entry_labels) {
        seen_over = seen_over || l == over;
        seen_under = seen_under || l == under;
    }
    if (!seen_over || !seen_under) throw InputError("a_kl: unknown strand label");
    int total = 0;
    walk_crossings(braid, [&](const std::string& o, const std::string& u, int w) {
        if (o == over && u == under) total += w;
    });
    return total;
}

std::map<std::string, int> over_crossing_sums(const LabeledBraid& braid, const std::string& under) {
    std::map<std::string, int> sums;
    walk_crossings(braid, [&](const std::string& o, const std::string& u, int w) {
        if (u == under) sums[o] += w;
    });
    return sums;
}

}  // namespace arrangis
