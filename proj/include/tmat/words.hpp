#ifndef TMAT_WORDS_HPP
#define TMAT_WORDS_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tmat/graph.hpp"

namespace tmat {

using Word = std::vector<std::string>;

/// Disjoint family of double occurrence words: every letter occurs exactly
/// twice, both occurrences in the same word, no letter in two words.
struct DowFamily {
    std::vector<Word> words;
    bool operator==(const DowFamily&) const = default;
};

/// Words separated by ';', letters by whitespace. Rejects malformed input.
DowFamily parse_dow(const std::string& text);
std::string to_dow_text(const DowFamily& f);

/// Letters in first-occurrence order (over the whole family, word by word).
std::vector<std::string> letters_of(const DowFamily& f);

/// Union of the words' interlacement graphs; vertex order is
/// first-occurrence order.
SimpleGraph interlacement_of(const DowFamily& f);

// -------- equivalence moves (Ghier) --------

struct CyclicPermute {
    int word;
    int amount; // left-rotate by this many letters
};
struct ReverseWord {
    int word;
};
struct Concatenate {
    int first, second; // result appended as first+second; operands removed
};
struct SplitWord {
    int word;
    int position; // cut before this index; both parts must be double occurrence
};
using EquivalenceMove = std::variant<CyclicPermute, ReverseWord, Concatenate, SplitWord>;

DowFamily apply_equivalence(const DowFamily& f, const EquivalenceMove& move);

/// Ghier turnaround on one word. The word must factor as W1'W1''W2'W2'' at
/// the given cut positions (0 <= i <= j <= k <= len), with W1',W2' over
/// vprime and W1'',W2'' over the complementary letter class. Variants:
/// 1 reverses W1'' and W2'', 2 reverses W1' and W2', 3 reverses all four.
DowFamily turnaround(const DowFamily& f, int word, std::array<int, 3> cuts,
                     const std::set<std::string>& vprime, int variant);

/// Lemma-4.6 splitting: when a word's interlacement graph is disconnected,
/// return a cyclic shift of it cut into two nonempty double occurrence
/// subwords; otherwise nothing.
std::optional<std::pair<Word, Word>> split_concatenation(const Word& word);

/// 4-regular graph F(W) with Euler system C(W) reading off the family.
std::pair<FourRegularGraph, EulerSystem> graph_from_family(const DowFamily& f);

/// One word per component, canonical representative, letters = vertex names.
DowFamily family_from_euler_system(const FourRegularGraph& g, const EulerSystem& c);

/// Lexicographically minimal over rotations and reversal, compared by
/// first-occurrence pattern first and by the letter tokens second.
Word canonical_word(const Word& w);

/// First-occurrence ranks, e.g. pattern of "b a b a" is 0 1 0 1. Canonical
/// hashable key of a word's equivalence class up to relabeling.
std::vector<int> word_pattern(const Word& w);

/// The family with every word canonicalized and the words sorted; a hashable
/// representative used by orbit searches.
DowFamily canonical_family(const DowFamily& f);

} // namespace tmat

#endif
