#include <doctest.h>

#include <map>
#include <set>

#include "tmat/errors.hpp"
#include "tmat/knots.hpp"
#include "tmat/matroid.hpp"
#include "tmat/poly.hpp"

using namespace tmat;

namespace {

const SparsePoly A = SparsePoly::variable("A");

PlanarDiagramCode code(std::vector<std::array<std::string, 4>> crossings, int free_loops = 0) {
    PlanarDiagramCode pd;
    pd.crossings = std::move(crossings);
    pd.free_loops = free_loops;
    return pd;
}

// independent state-sum oracle: loops are counted by pairing tuple positions
// directly, never touching the half-edge machinery
SparsePoly bracket_oracle(const PlanarDiagramCode& pd) {
    const int n = static_cast<int>(pd.crossings.size());
    SparsePoly total;
    const SparsePoly d = -A.pow(2) - A.pow(-2);
    for (std::uint32_t state = 0; state < (std::uint32_t{1} << n); ++state) {
        // node (crossing, position); smoothing partner + arc partner
        auto node = [](int c, int p) { return 4 * c + p; };
        std::map<int, int> arc_partner, smooth_partner;
        std::map<std::string, std::vector<int>> arc_nodes;
        for (int c = 0; c < n; ++c) {
            const bool use_b = (state >> c) & 1;
            if (!use_b) {
                smooth_partner[node(c, 0)] = node(c, 1);
                smooth_partner[node(c, 1)] = node(c, 0);
                smooth_partner[node(c, 2)] = node(c, 3);
                smooth_partner[node(c, 3)] = node(c, 2);
            } else {
                smooth_partner[node(c, 0)] = node(c, 3);
                smooth_partner[node(c, 3)] = node(c, 0);
                smooth_partner[node(c, 1)] = node(c, 2);
                smooth_partner[node(c, 2)] = node(c, 1);
            }
            for (int p = 0; p < 4; ++p)
                arc_nodes[pd.crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)]]
                    .push_back(node(c, p));
        }
        for (const auto& [arc, nodes] : arc_nodes) {
            REQUIRE(nodes.size() == 2);
            arc_partner[nodes[0]] = nodes[1];
            arc_partner[nodes[1]] = nodes[0];
        }
        int loops = pd.free_loops;
        std::set<int> seen;
        for (int c = 0; c < n; ++c)
            for (int p = 0; p < 4; ++p) {
                int start = node(c, p);
                if (seen.contains(start)) continue;
                ++loops;
                int cur = start;
                while (true) {
                    seen.insert(cur);
                    const int across = smooth_partner[cur];
                    seen.insert(across);
                    cur = arc_partner[across];
                    if (cur == start) break;
                }
            }
        const int b_count = std::popcount(state);
        total += A.pow(n - 2 * b_count) * d.pow(loops - 1);
    }
    return total;
}

// splice an R2 poke into one arc of a code (two extra crossings, bracket
// must not move)
PlanarDiagramCode insert_r2(PlanarDiagramCode pd, const std::string& arc) {
    const std::string p1 = "_r2a", p2 = "_r2b", p4 = "_r2c", y = "_r2y";
    bool renamed = false;
    for (auto& crossing : pd.crossings)
        for (auto& label : crossing)
            if (!renamed && label == arc) {
                label = y;
                renamed = true;
            }
    REQUIRE(renamed);
    pd.crossings.push_back({p1, p4, p2, arc});
    pd.crossings.push_back({p2, p4, y, p1});
    return pd;
}

// kink insertion: one occurrence of the arc renamed, one extra crossing
PlanarDiagramCode insert_r1(PlanarDiagramCode pd, const std::string& arc, bool positive) {
    const std::string y = "_r1y", w = "_r1w";
    bool renamed = false;
    for (auto& crossing : pd.crossings)
        for (auto& label : crossing)
            if (!renamed && label == arc) {
                label = y;
                renamed = true;
            }
    REQUIRE(renamed);
    if (positive)
        pd.crossings.push_back({arc, y, w, w});
    else
        pd.crossings.push_back({arc, w, w, y});
    return pd;
}

const PlanarDiagramCode trefoil =
    code({{"1", "4", "2", "5"}, {"3", "6", "4", "1"}, {"5", "2", "6", "3"}});

} // namespace

TEST_CASE("pd parsing") {
    const PlanarDiagramCode pd = parse_pd("# trefoil\nwrithe: 3\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
    CHECK(pd.crossings.size() == 3);
    CHECK(pd.writhe == 3);
    CHECK_THROWS_AS(diagram_to_graph(parse_pd("X 1 1 1 2\n")), input_error);
    CHECK_THROWS_AS(bracket(parse_pd("")), input_error);
}

TEST_CASE("empty unknot bracket is 1") {
    CHECK(bracket(code({}, 1)) == SparsePoly(1));
    CHECK(normalized_bracket(code({}, 1), 0) == SparsePoly(1));
}

TEST_CASE("kinks pin the smoothing convention") {
    CHECK(bracket(code({{"a", "a", "b", "b"}})) == -A.pow(3));
    CHECK(bracket(code({{"a", "b", "b", "a"}})) == -A.pow(-3));
    CHECK(normalized_bracket(code({{"a", "a", "b", "b"}}), 1) == SparsePoly(1));
    CHECK(normalized_bracket(code({{"a", "b", "b", "a"}}), -1) == SparsePoly(1));
}

TEST_CASE("one-crossing kink is the two-loop vertex") {
    const DiagramGraph dg = diagram_to_graph(code({{"a", "a", "b", "b"}}));
    CHECK(dg.graph.num_vertices() == 1);
    for (const auto& [h, m] : dg.graph.edges()) CHECK(h / 4 == m / 4);
}

TEST_CASE("trefoil bracket equals the independent oracle") {
    const SparsePoly b = bracket(trefoil);
    CHECK(b == bracket_oracle(trefoil));
    CHECK(b.num_terms() == 3); // the bracket of a trefoil has three terms
}

TEST_CASE("poked unknot evaluates to 1") {
    const PlanarDiagramCode poke = code({{"1", "4", "2", "3"}, {"2", "4", "3", "1"}});
    CHECK(bracket(poke) == SparsePoly(1));
    CHECK(bracket(poke) == bracket_oracle(poke));
}

TEST_CASE("R2 insertion leaves the bracket unchanged") {
    const std::vector<std::pair<PlanarDiagramCode, std::string>> cases{
        {code({{"a", "a", "b", "b"}}), "a"},
        {code({{"a", "a", "b", "b"}}), "b"},
        {code({{"a", "b", "b", "a"}}), "a"},
        {trefoil, "1"},
        {trefoil, "4"},
    };
    for (const auto& [pd, arc] : cases) {
        const PlanarDiagramCode poked = insert_r2(pd, arc);
        CHECK(bracket(poked) == bracket(pd));
        CHECK(bracket(poked) == bracket_oracle(poked));
    }
}

TEST_CASE("R1 insertion multiplies by -A^{+-3}") {
    for (const auto& arc : {std::string("1"), std::string("6")}) {
        CHECK(bracket(insert_r1(trefoil, arc, true)) == -A.pow(3) * bracket(trefoil));
        CHECK(bracket(insert_r1(trefoil, arc, false)) == -A.pow(-3) * bracket(trefoil));
    }
}

TEST_CASE("bracket of a disjoint union picks up one d factor") {
    const PlanarDiagramCode k1 = code({{"a", "a", "b", "b"}});
    PlanarDiagramCode both = code({{"a", "a", "b", "b"}, {"x", "x", "y", "y"}});
    const SparsePoly d = -A.pow(2) - A.pow(-2);
    CHECK(bracket(both) == d * bracket(k1) * bracket(k1));
}

TEST_CASE("A-state loop count matches the circuit-nullity formula") {
    const DiagramGraph dg = diagram_to_graph(trefoil);
    const int n = dg.graph.num_vertices();
    const int c = dg.graph.num_components();
    const Transversal all_a(static_cast<std::size_t>(n), static_cast<std::uint8_t>(dg.a_pairing));
    const TransitionMatroid tm = transition_matroid(dg.graph, euler_system(dg.graph));
    const int r = rank(tm.matroid, tm.transversal_mask(all_a));
    CHECK(count_circuits(dg.graph, all_a) == n + c - r);
}

TEST_CASE("normalized bracket of the trefoil with its writhe") {
    const SparsePoly normalized = normalized_bracket(trefoil, 3);
    CHECK(normalized == (-A.pow(3)).pow(-3) * bracket_oracle(trefoil));
}
