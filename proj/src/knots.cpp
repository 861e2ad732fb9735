#include "tmat/knots.hpp"

#include <map>
#include <sstream>

#include "tmat/errors.hpp"

namespace tmat {

PlanarDiagramCode parse_pd(const std::string& text) {
    PlanarDiagramCode pd;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        if (kind == "X") {
            std::array<std::string, 4> arcs;
            if (!(ls >> arcs[0] >> arcs[1] >> arcs[2] >> arcs[3]))
                throw input_error("line " + std::to_string(lineno) + ": crossing needs four arc labels");
            pd.crossings.push_back(arcs);
        } else if (kind == "writhe:") {
            if (!(ls >> line)) throw input_error("line " + std::to_string(lineno) + ": writhe needs a value");
            pd.writhe = std::stoi(line);
        } else if (kind == "loops:") {
            if (!(ls >> line)) throw input_error("line " + std::to_string(lineno) + ": loops needs a value");
            pd.free_loops = std::stoi(line);
            if (pd.free_loops < 0) throw input_error("line " + std::to_string(lineno) + ": loops must be >= 0");
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown directive '" + kind + "'");
        }
    }
    return pd;
}

DiagramGraph diagram_to_graph(const PlanarDiagramCode& pd) {
    const int n = static_cast<int>(pd.crossings.size());
    std::map<std::string, std::vector<int>> arc_slots; // arc label -> half-edges
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < 4; ++s)
            arc_slots[pd.crossings[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)]]
                .push_back(4 * v + s);
    std::vector<int> mate(static_cast<std::size_t>(4 * n), -1);
    for (const auto& [arc, slots] : arc_slots) {
        if (slots.size() != 2)
            throw input_error("arc label '" + arc + "' used " + std::to_string(slots.size()) +
                              " times (needs exactly 2)");
        mate[static_cast<std::size_t>(slots[0])] = slots[1];
        mate[static_cast<std::size_t>(slots[1])] = slots[0];
    }
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("c" + std::to_string(v));
    DiagramGraph dg;
    dg.graph = FourRegularGraph::from_mate(std::move(names), std::move(mate));
    dg.free_loops = pd.free_loops;
    return dg;
}

SparsePoly bracket(const PlanarDiagramCode& pd) {
    const DiagramGraph dg = diagram_to_graph(pd);
    const int n = dg.graph.num_vertices();
    if (n > 24) throw budget_error("bracket: more than 24 crossings");
    if (n == 0 && dg.free_loops == 0)
        throw input_error("bracket: empty diagram (no crossings, no loops)");

    std::map<std::pair<int, int>, BigInt> counts; // (#A - #B, loops) -> state count
    Transversal t(static_cast<std::size_t>(n), 0);
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
        int b_count = 0;
        for (int v = 0; v < n; ++v) {
            const bool use_b = (state >> v) & 1;
            b_count += use_b;
            t[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>(use_b ? dg.b_pairing : dg.a_pairing);
        }
        const int loops = (n == 0 ? 0 : count_circuits(dg.graph, t)) + dg.free_loops;
        counts[{n - 2 * b_count, loops}] += 1;
    }
    const SparsePoly a = SparsePoly::variable("A");
    const SparsePoly d = -a.pow(2) - a.pow(-2);
    SparsePoly total;
    for (const auto& [key, count] : counts) {
        const auto [exponent, loops] = key;
        total += SparsePoly(count) * a.pow(exponent) * d.pow(loops - 1);
    }
    return total;
}

SparsePoly normalized_bracket(const PlanarDiagramCode& pd, int writhe) {
    const SparsePoly a = SparsePoly::variable("A");
    return (-a.pow(3)).pow(-writhe) * bracket(pd);
}

} // namespace tmat
