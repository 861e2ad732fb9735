#ifndef TMAT_KNOTS_HPP
#define TMAT_KNOTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tmat/graph.hpp"
#include "tmat/poly.hpp"

namespace tmat {

/// Planar diagram code: one 4-tuple of arc labels per crossing, in fixed
/// cyclic order starting from the incoming under-strand. Crossing-free
/// closed components are carried as a count.
struct PlanarDiagramCode {
    std::vector<std::array<std::string, 4>> crossings;
    int free_loops = 0;
    std::optional<int> writhe;
};

/// PD text format: one "X a b c d" line per crossing, optional
/// "writhe: k" and "loops: m" headers, '#' comments.
PlanarDiagramCode parse_pd(const std::string& text);

/// Underlying 4-regular graph: a vertex per crossing, slots in tuple order.
/// A-smoothing pairs slots {0,1},{2,3} (= t0), B-smoothing {0,3},{1,2}
/// (= t2), the crossing transition {0,2},{1,3} (= t1).
struct DiagramGraph {
    FourRegularGraph graph;
    int a_pairing = 0;
    int b_pairing = 2;
    int crossing_pairing = 1;
    int free_loops = 0;
};
DiagramGraph diagram_to_graph(const PlanarDiagramCode& pd);

/// Kauffman bracket state sum: over the 2^n A/B smoothing states,
/// A^{#A-#B} d^{loops-1} with d = -A^2 - A^-2. Loops are counted by tracing
/// the smoothing transversal plus the recorded free loops.
SparsePoly bracket(const PlanarDiagramCode& pd);

/// (-A^3)^{-writhe} * bracket(pd).
SparsePoly normalized_bracket(const PlanarDiagramCode& pd, int writhe);

} // namespace tmat

#endif
