#pragma once

#include <map>
#include <string>
#include <vector>

namespace arrangis {

/**
 * Braid words on n labelled strands.  Letters are signed generator
 * indices: +i swaps positions i and i+1 with a positive crossing, -i
 * with a negative one (1-based, bottom-to-top).  Words read left to
 * right in time.
 *
 * Crossing convention: in a positive letter the strand entering at the
 * HIGHER of the two positions passes over; a negative letter is the
 * mirror image.  Positive half-twists then have every higher strand
 * crossing over the lower ones, and the crossing counts a_{k,l} below
 * match the worked values this convention was calibrated against.
 */
inline constexpr bool kUpperStrandCrossesOver = true;

struct BraidWord {
    int strands = 0;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    BraidWord inverse() const;
    BraidWord& append(const BraidWord& o);

    // Positions after the word: result[p] is where the strand starting
    // at position p (1-based; index p-1) ends up.
    std::vector<int> permutation() const;
    bool operator==(const BraidWord&) const = default;
};

// The positive half-twist on the s consecutive strands at positions
// pos..pos+s-1: word sigma_pos, sigma_{pos+1} sigma_pos, ..., of length
// s(s-1)/2, reversing the block.
BraidWord half_twist(int strands, int pos, int width);

struct LabeledBraid {
    BraidWord word;
    std::vector<std::string> entry_labels;  // index 0 = position 1 (bottom)

    std::vector<std::string> exit_labels() const;
    LabeledBraid inverse() const;
    // Concatenation; the other braid's entry labels must match our exit.
    LabeledBraid then(const LabeledBraid& o) const;
};

// Algebraic count of crossings where strand `over` passes over strand
// `under`; each counted with the sign of its letter.
int a_kl(const LabeledBraid& braid, const std::string& over, const std::string& under);

// All of sum_j a_{j,s}: for every crossing where `under` is the strand
// passed over, adds the letter sign to the over-strand's coefficient.
std::map<std::string, int> over_crossing_sums(const LabeledBraid& braid, const std::string& under);

}  // namespace arrangis
