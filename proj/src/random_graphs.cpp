#include "tmat/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "tmat/errors.hpp"
#include "tmat/words.hpp"

namespace tmat {

FourRegularGraph random_four_regular(int n, std::mt19937_64& rng) {
    if (n < 1) throw input_error("random_four_regular: need at least one vertex");
    std::vector<int> stubs(static_cast<std::size_t>(4 * n));
    std::iota(stubs.begin(), stubs.end(), 0);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<int> mate(static_cast<std::size_t>(4 * n));
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        mate[static_cast<std::size_t>(stubs[i])] = stubs[i + 1];
        mate[static_cast<std::size_t>(stubs[i + 1])] = stubs[i];
    }
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("g" + std::to_string(v));
    return FourRegularGraph::from_mate(std::move(names), std::move(mate));
}

namespace {
FourRegularGraph from_word(const std::string& text) {
    return graph_from_family(parse_dow(text)).first;
}
} // namespace

FourRegularGraph two_loop_graph() {
    // loops on slots (0,1) and (2,3)
    GraphSpec spec;
    spec.vertices = {"a"};
    spec.edges = {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}};
    return FourRegularGraph::build(spec);
}

FourRegularGraph abab_graph() { return from_word("a b a b"); }
FourRegularGraph aabb_graph() { return from_word("a a b b"); }
FourRegularGraph abcabc_graph() { return from_word("a b c a b c"); }

FourRegularGraph k5_graph() {
    GraphSpec spec;
    for (int v = 0; v < 5; ++v) spec.vertices.push_back("k" + std::to_string(v));
    std::array<int, 5> next_slot{};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            spec.edges.push_back({{i, next_slot[static_cast<std::size_t>(i)]++},
                                  {j, next_slot[static_cast<std::size_t>(j)]++}});
    return FourRegularGraph::build(spec);
}

std::vector<FourRegularGraph> seeded_corpus(int count, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::vector<FourRegularGraph> graphs;
    for (int i = 0; i < count; ++i) graphs.push_back(random_four_regular(pick_n(rng), rng));
    return graphs;
}

} // namespace tmat
