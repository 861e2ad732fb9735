#ifndef TMAT_CORPUS_HPP
#define TMAT_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tmat/graph.hpp"

namespace tmat {

/// Uniform random 4-regular graph (loops and parallel edges included):
/// a random perfect matching of the 4n half-edge stubs.
FourRegularGraph random_four_regular(int n, std::mt19937_64& rng);

// Small named graphs used throughout the tests.
FourRegularGraph two_loop_graph();  // word aa: one vertex, two loops
FourRegularGraph abab_graph();      // two vertices, four parallel edges
FourRegularGraph aabb_graph();      // two two-loop vertices joined by a 2-cut
FourRegularGraph abcabc_graph();    // doubled triangle
FourRegularGraph k5_graph();        // K5, the smallest nonplanar 4-regular graph

/// `count` seeded random graphs with 1..max_n vertices.
std::vector<FourRegularGraph> seeded_corpus(int count, int max_n, std::uint64_t seed);

} // namespace tmat

#endif
