#include "tmat/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tmat/errors.hpp"

namespace tmat {

namespace {

void check_family(const DowFamily& f) {
    std::map<std::string, std::pair<int, int>> counts; // letter -> (word, occurrences)
    for (int wi = 0; wi < static_cast<int>(f.words.size()); ++wi) {
        for (const auto& letter : f.words[static_cast<std::size_t>(wi)]) {
            auto [it, fresh] = counts.emplace(letter, std::make_pair(wi, 1));
            if (!fresh) {
                if (it->second.first != wi)
                    throw input_error("letter '" + letter + "' appears in two words");
                ++it->second.second;
            }
        }
    }
    for (const auto& [letter, wc] : counts)
        if (wc.second != 2)
            throw input_error("letter '" + letter + "' occurs " + std::to_string(wc.second) +
                              " times (needs exactly 2)");
}

std::vector<int> word_components(const Word& w) {
    // connected components of the single word's interlacement graph,
    // indexed by position
    std::vector<std::string> letters;
    std::map<std::string, int> id;
    for (const auto& l : w)
        if (id.emplace(l, static_cast<int>(letters.size())).second) letters.push_back(l);
    const int n = static_cast<int>(letters.size());
    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(n), {-1, -1});
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        auto& p = pos[static_cast<std::size_t>(id[w[static_cast<std::size_t>(i)]])];
        (p.first == -1 ? p.first : p.second) = i;
    }
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
        return x;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto [a1, a2] = pos[static_cast<std::size_t>(a)];
            const auto [b1, b2] = pos[static_cast<std::size_t>(b)];
            const bool in1 = b1 > a1 && b1 < a2;
            const bool in2 = b2 > a1 && b2 < a2;
            if (in1 != in2) comp[static_cast<std::size_t>(find(a))] = find(b);
        }
    std::vector<int> by_position(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) by_position[i] = find(id[w[i]]);
    return by_position;
}

bool is_double_occurrence(const Word& w) {
    std::map<std::string, int> counts;
    for (const auto& l : w) ++counts[l];
    for (const auto& [l, c] : counts)
        if (c != 2) return false;
    return true;
}

} // namespace

DowFamily parse_dow(const std::string& text) {
    std::string spaced;
    for (char c : text) {
        if (c == ';') spaced += " ; ";
        else spaced += c;
    }
    DowFamily f;
    Word current;
    std::istringstream in(spaced);
    std::string token;
    while (in >> token) {
        if (token == ";") {
            f.words.push_back(current);
            current.clear();
            continue;
        }
        current.push_back(token);
    }
    f.words.push_back(current);
    // drop empty words produced by trailing separators
    std::erase_if(f.words, [](const Word& w) { return w.empty(); });
    check_family(f);
    return f;
}

std::string to_dow_text(const DowFamily& f) {
    std::ostringstream out;
    for (std::size_t wi = 0; wi < f.words.size(); ++wi) {
        if (wi) out << " ; ";
        for (std::size_t i = 0; i < f.words[wi].size(); ++i) {
            if (i) out << " ";
            out << f.words[wi][i];
        }
    }
    return out.str();
}

std::vector<std::string> letters_of(const DowFamily& f) {
    std::vector<std::string> letters;
    for (const auto& w : f.words)
        for (const auto& l : w)
            if (std::find(letters.begin(), letters.end(), l) == letters.end()) letters.push_back(l);
    return letters;
}

SimpleGraph interlacement_of(const DowFamily& f) {
    check_family(f);
    const auto letters = letters_of(f);
    std::map<std::string, int> id;
    for (int i = 0; i < static_cast<int>(letters.size()); ++i)
        id[letters[static_cast<std::size_t>(i)]] = i;
    SimpleGraph h;
    h.names = letters;
    h.adj = gf2::BitMatrix(static_cast<int>(letters.size()), static_cast<int>(letters.size()));
    for (const auto& w : f.words) {
        std::map<int, std::pair<int, int>> pos;
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            auto [it, fresh] = pos.emplace(id[w[static_cast<std::size_t>(i)]], std::make_pair(i, -1));
            if (!fresh) it->second.second = i;
        }
        for (const auto& [a, pa] : pos)
            for (const auto& [b, pb] : pos) {
                if (a >= b) continue;
                const bool in1 = pb.first > pa.first && pb.first < pa.second;
                const bool in2 = pb.second > pa.first && pb.second < pa.second;
                if (in1 != in2) {
                    h.adj.set(a, b, true);
                    h.adj.set(b, a, true);
                }
            }
    }
    return h;
}

DowFamily apply_equivalence(const DowFamily& f, const EquivalenceMove& move) {
    DowFamily out = f;
    auto word_in_range = [&](int w) {
        if (w < 0 || w >= static_cast<int>(out.words.size()))
            throw input_error("equivalence move: word index out of range");
    };
    if (const auto* m = std::get_if<CyclicPermute>(&move)) {
        word_in_range(m->word);
        Word& w = out.words[static_cast<std::size_t>(m->word)];
        if (!w.empty()) {
            const int len = static_cast<int>(w.size());
            const int amount = ((m->amount % len) + len) % len;
            std::rotate(w.begin(), w.begin() + amount, w.end());
        }
    } else if (const auto* m = std::get_if<ReverseWord>(&move)) {
        word_in_range(m->word);
        auto& w = out.words[static_cast<std::size_t>(m->word)];
        std::reverse(w.begin(), w.end());
    } else if (const auto* m = std::get_if<Concatenate>(&move)) {
        word_in_range(m->first);
        word_in_range(m->second);
        if (m->first == m->second) throw input_error("concatenate: words must differ");
        Word joined = out.words[static_cast<std::size_t>(m->first)];
        const auto& tail = out.words[static_cast<std::size_t>(m->second)];
        joined.insert(joined.end(), tail.begin(), tail.end());
        const int lo = std::min(m->first, m->second), hi = std::max(m->first, m->second);
        out.words.erase(out.words.begin() + hi);
        out.words[static_cast<std::size_t>(lo)] = std::move(joined);
    } else if (const auto* m = std::get_if<SplitWord>(&move)) {
        word_in_range(m->word);
        const Word& w = out.words[static_cast<std::size_t>(m->word)];
        if (m->position <= 0 || m->position >= static_cast<int>(w.size()))
            throw input_error("split: cut must leave two nonempty parts");
        Word left(w.begin(), w.begin() + m->position);
        Word right(w.begin() + m->position, w.end());
        if (!is_double_occurrence(left) || !is_double_occurrence(right))
            throw input_error("split: a letter pair straddles the cut");
        out.words[static_cast<std::size_t>(m->word)] = std::move(left);
        out.words.insert(out.words.begin() + m->word + 1, std::move(right));
    }
    check_family(out);
    return out;
}

DowFamily turnaround(const DowFamily& f, int word, std::array<int, 3> cuts,
                     const std::set<std::string>& vprime, int variant) {
    if (word < 0 || word >= static_cast<int>(f.words.size()))
        throw input_error("turnaround: word index out of range");
    if (variant < 1 || variant > 3) throw input_error("turnaround: variant must be 1, 2 or 3");
    const Word& w = f.words[static_cast<std::size_t>(word)];
    const int len = static_cast<int>(w.size());
    const auto [i, j, k] = cuts;
    if (!(0 <= i && i <= j && j <= k && k <= len)) throw input_error("turnaround: bad cut positions");
    auto block = [&](int from, int to) { return Word(w.begin() + from, w.begin() + to); };
    Word w1p = block(0, i), w1pp = block(i, j), w2p = block(j, k), w2pp = block(k, len);
    for (const auto& l : w1p)
        if (!vprime.contains(l)) throw input_error("turnaround: W1' letter '" + l + "' not in V'");
    for (const auto& l : w2p)
        if (!vprime.contains(l)) throw input_error("turnaround: W2' letter '" + l + "' not in V'");
    for (const auto& l : w1pp)
        if (vprime.contains(l)) throw input_error("turnaround: W1'' letter '" + l + "' in V'");
    for (const auto& l : w2pp)
        if (vprime.contains(l)) throw input_error("turnaround: W2'' letter '" + l + "' in V'");
    if (variant == 1 || variant == 3) {
        std::reverse(w1pp.begin(), w1pp.end());
        std::reverse(w2pp.begin(), w2pp.end());
    }
    if (variant == 2 || variant == 3) {
        std::reverse(w1p.begin(), w1p.end());
        std::reverse(w2p.begin(), w2p.end());
    }
    Word result = w1p;
    result.insert(result.end(), w1pp.begin(), w1pp.end());
    result.insert(result.end(), w2p.begin(), w2p.end());
    result.insert(result.end(), w2pp.begin(), w2pp.end());
    DowFamily out = f;
    out.words[static_cast<std::size_t>(word)] = std::move(result);
    return out;
}

std::optional<std::pair<Word, Word>> split_concatenation(const Word& word) {
    if (!is_double_occurrence(word)) throw input_error("split_concatenation: not a double occurrence word");
    if (word.empty()) return std::nullopt;
    const int len = static_cast<int>(word.size());
    for (int shift = 0; shift < len; ++shift) {
        Word shifted(word.size());
        for (int p = 0; p < len; ++p)
            shifted[static_cast<std::size_t>(p)] = word[static_cast<std::size_t>((p + shift) % len)];
        const auto comp = word_components(shifted);
        if (comp.front() == comp.back()) continue;
        // cut after the last letter in the first position's component
        int cut = 0;
        for (int p = 0; p < len; ++p)
            if (comp[static_cast<std::size_t>(p)] == comp.front()) cut = p;
        Word left(shifted.begin(), shifted.begin() + cut + 1);
        Word right(shifted.begin() + cut + 1, shifted.end());
        if (!is_double_occurrence(left) || !is_double_occurrence(right))
            throw consistency_error("split_concatenation: cut produced a non-DOW (theorem violation)");
        return std::make_pair(std::move(left), std::move(right));
    }
    return std::nullopt;
}

std::pair<FourRegularGraph, EulerSystem> graph_from_family(const DowFamily& f) {
    check_family(f);
    const auto letters = letters_of(f);
    std::map<std::string, int> id;
    for (int i = 0; i < static_cast<int>(letters.size()); ++i)
        id[letters[static_cast<std::size_t>(i)]] = i;
    const int n = static_cast<int>(letters.size());
    std::vector<int> mate(static_cast<std::size_t>(4 * n), -1);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& w : f.words) {
        // occurrence q gets in-slot and out-slot; first occurrence (0,1), second (2,3)
        std::vector<std::pair<int, int>> inout;
        for (const auto& l : w) {
            const int v = id[l];
            const int occ = seen[static_cast<std::size_t>(v)]++;
            inout.emplace_back(4 * v + 2 * occ, 4 * v + 2 * occ + 1);
        }
        const int p = static_cast<int>(w.size());
        for (int q = 0; q < p; ++q) {
            const int out_he = inout[static_cast<std::size_t>(q)].second;
            const int in_he = inout[static_cast<std::size_t>((q + 1) % p)].first;
            mate[static_cast<std::size_t>(out_he)] = in_he;
            mate[static_cast<std::size_t>(in_he)] = out_he;
        }
    }
    FourRegularGraph g = FourRegularGraph::from_mate(letters, std::move(mate));
    // the reading circuits use the {01|23} pairing at every vertex
    EulerSystem c{trace_partition(g, Transversal(static_cast<std::size_t>(n), 0))};
    if (c.size() != g.num_components())
        throw consistency_error("graph_from_family: reading word did not give an Euler system");
    return {std::move(g), std::move(c)};
}

DowFamily family_from_euler_system(const FourRegularGraph& g, const EulerSystem& c) {
    DowFamily f;
    for (const auto& circuit : c.partition.circuits) {
        Word w;
        for (std::size_t i = 0; i < circuit.half_edges.size(); i += 2)
            w.push_back(g.vertex_name(circuit.half_edges[i] / 4));
        f.words.push_back(canonical_word(w));
    }
    std::sort(f.words.begin(), f.words.end(), [](const Word& a, const Word& b) {
        return std::make_pair(word_pattern(a), a) < std::make_pair(word_pattern(b), b);
    });
    return f;
}

std::vector<int> word_pattern(const Word& w) {
    std::vector<int> pattern;
    std::map<std::string, int> rank;
    for (const auto& l : w)
        pattern.push_back(rank.emplace(l, static_cast<int>(rank.size())).first->second);
    return pattern;
}

Word canonical_word(const Word& w) {
    if (w.empty()) return w;
    const int len = static_cast<int>(w.size());
    Word best = w;
    auto best_pattern = word_pattern(best);
    auto consider = [&](const Word& candidate) {
        auto pattern = word_pattern(candidate);
        if (std::make_pair(pattern, candidate) < std::make_pair(best_pattern, best)) {
            best = candidate;
            best_pattern = std::move(pattern);
        }
    };
    Word rev(w.rbegin(), w.rend());
    for (int shift = 0; shift < len; ++shift) {
        Word cand(w.size());
        for (int p = 0; p < len; ++p)
            cand[static_cast<std::size_t>(p)] = w[static_cast<std::size_t>((p + shift) % len)];
        consider(cand);
        for (int p = 0; p < len; ++p)
            cand[static_cast<std::size_t>(p)] = rev[static_cast<std::size_t>((p + shift) % len)];
        consider(cand);
    }
    return best;
}

DowFamily canonical_family(const DowFamily& f) {
    DowFamily out;
    for (const auto& w : f.words) out.words.push_back(canonical_word(w));
    std::sort(out.words.begin(), out.words.end(), [](const Word& a, const Word& b) {
        return std::make_pair(word_pattern(a), a) < std::make_pair(word_pattern(b), b);
    });
    return out;
}

} // namespace tmat
