#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tmat/corpus.hpp"
#include "tmat/errors.hpp"
#include "tmat/graph.hpp"
#include "tmat/words.hpp"

using namespace tmat;

namespace {

Transversal uniform_transversal(int n, int pairing) {
    return Transversal(static_cast<std::size_t>(n), static_cast<std::uint8_t>(pairing));
}

bool graphs_adjacency_equal(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.adjacent(i, j) != b.adjacent(i, j)) return false;
    return true;
}

} // namespace

TEST_CASE("validate accepts the two-loop vertex") {
    GraphSpec spec;
    spec.vertices = {"v"};
    spec.edges = {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}};
    CHECK(validate(spec).empty());
    CHECK_NOTHROW(FourRegularGraph::build(spec));
}

TEST_CASE("validate reports unused slots") {
    GraphSpec spec;
    spec.vertices = {"v"};
    spec.edges = {{{0, 0}, {0, 1}}};
    const auto issues = validate(spec);
    REQUIRE(issues.size() == 2);
    CHECK(issues[0] == "unused slot v.2");
    CHECK(issues[1] == "unused slot v.3");
}

TEST_CASE("validate reports self-paired endpoints and duplicate slots") {
    GraphSpec spec;
    spec.vertices = {"v"};
    spec.edges = {{{0, 0}, {0, 0}}, {{0, 1}, {0, 2}}};
    const auto issues = validate(spec);
    REQUIRE(!issues.empty());
    CHECK(issues[0] == "edge 0: self-paired endpoint v.0");
    CHECK_THROWS_AS(FourRegularGraph::build(spec), input_error);
}

TEST_CASE("frg text round trip") {
    const FourRegularGraph g = abcabc_graph();
    const FourRegularGraph h = FourRegularGraph::build(parse_frg(to_frg(g)));
    CHECK(g == h);
    CHECK_THROWS_AS(parse_frg("v a\ne a.0 a.9\n"), input_error);
    CHECK_THROWS_AS(parse_frg("v a\nv a\n"), input_error);
    CHECK_THROWS_AS(parse_frg("q nonsense\n"), input_error);
}

TEST_CASE("two-loop vertex traces") {
    const FourRegularGraph g = two_loop_graph();
    CHECK(trace_partition(g, uniform_transversal(1, 0)).size() == 2);
    CHECK(trace_partition(g, uniform_transversal(1, 1)).size() == 1);
    CHECK(trace_partition(g, uniform_transversal(1, 2)).size() == 1);
    CHECK(count_circuits(g, uniform_transversal(1, 0)) == 2);
}

TEST_CASE("abab graph with the reading transversal gives one circuit") {
    const auto [g, c] = graph_from_family(parse_dow("a b a b"));
    CHECK(trace_partition(g, uniform_transversal(2, 0)).size() == 1);
    CHECK(c.size() == 1);
}

TEST_CASE("re-tracing a partition's transversal reproduces its circuits") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const FourRegularGraph g = random_four_regular(1 + static_cast<int>(rng() % 6), rng);
        const Transversal t = transversal_from_index(rng() % transversal_count(g.num_vertices()),
                                                     g.num_vertices());
        const CircuitPartition p = trace_partition(g, t);
        CHECK(trace_partition(g, p.transversal).circuits == p.circuits);
        // every half-edge appears exactly once across the circuits
        std::set<int> seen;
        std::size_t total = 0;
        for (const auto& circuit : p.circuits) {
            seen.insert(circuit.half_edges.begin(), circuit.half_edges.end());
            total += circuit.half_edges.size();
        }
        CHECK(static_cast<int>(total) == g.num_half_edges());
        CHECK(static_cast<int>(seen.size()) == g.num_half_edges());
    }
}

TEST_CASE("euler system covers each component once") {
    CHECK(euler_system(two_loop_graph()).size() == 1);
    const FourRegularGraph dt = abcabc_graph();
    const EulerSystem c = euler_system(dt);
    CHECK(c.size() == 1);
    CHECK(c.partition.circuits[0].length() == 6);

    const auto [two, c2] = graph_from_family(parse_dow("a a ; b b"));
    CHECK(two.num_components() == 2);
    CHECK(euler_system(two).size() == 2);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const FourRegularGraph g = random_four_regular(1 + static_cast<int>(rng() % 8), rng);
        CHECK(euler_system(g).size() == g.num_components());
    }
}

TEST_CASE("interlacement of the named graphs") {
    const auto [gab, cab] = graph_from_family(parse_dow("a b a b"));
    const SimpleGraph k2 = interlacement(gab, cab);
    CHECK(k2.adjacent(0, 1));

    const auto [gdt, cdt] = graph_from_family(parse_dow("a b c a b c"));
    const SimpleGraph k3 = interlacement(gdt, cdt);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3.adjacent(i, j) == (i != j));

    const auto [gaabb, caabb] = graph_from_family(parse_dow("a a b b"));
    const SimpleGraph empty2 = interlacement(gaabb, caabb);
    CHECK(!empty2.adjacent(0, 1));
}

TEST_CASE("transition labels of the two-loop vertex") {
    const FourRegularGraph g = two_loop_graph();
    const EulerSystem c = euler_system(g);
    const auto labels = transition_labels(g, c);
    // chi is the pairing that splits the circuit in two, psi the other Euler pairing
    const int phi = pairing_with_label(labels, 0, TransitionLabel::phi);
    const int chi = pairing_with_label(labels, 0, TransitionLabel::chi);
    const int psi = pairing_with_label(labels, 0, TransitionLabel::psi);
    CHECK(phi == c.partition.transversal[0]);
    CHECK(trace_partition(g, uniform_transversal(1, chi)).size() == 2);
    CHECK(trace_partition(g, uniform_transversal(1, psi)).size() == 1);
}

TEST_CASE("kappa transform is an involution and swaps phi/psi at the vertex") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        const FourRegularGraph g = random_four_regular(1 + static_cast<int>(rng() % 6), rng);
        const EulerSystem c = euler_system(g);
        const auto labels = transition_labels(g, c);
        for (int v = 0; v < g.num_vertices(); ++v) {
            const EulerSystem cv = kappa_transform(g, c, v);
            CHECK(cv.size() == c.size());
            CHECK(kappa_transform(g, cv, v) == c);
            const auto labels_v = transition_labels(g, cv);
            CHECK(pairing_with_label(labels_v, v, TransitionLabel::phi) ==
                  pairing_with_label(labels, v, TransitionLabel::psi));
            CHECK(pairing_with_label(labels_v, v, TransitionLabel::psi) ==
                  pairing_with_label(labels, v, TransitionLabel::phi));
            // chi <-> psi swap at interlacement neighbors, all labels fixed elsewhere
            const SimpleGraph ic = interlacement(g, c);
            for (int w = 0; w < g.num_vertices(); ++w) {
                if (w == v) continue;
                if (ic.adjacent(v, w)) {
                    CHECK(pairing_with_label(labels_v, w, TransitionLabel::chi) ==
                          pairing_with_label(labels, w, TransitionLabel::psi));
                    CHECK(pairing_with_label(labels_v, w, TransitionLabel::psi) ==
                          pairing_with_label(labels, w, TransitionLabel::chi));
                } else {
                    for (int p = 0; p < 3; ++p)
                        CHECK(labels_v[static_cast<std::size_t>(w)][static_cast<std::size_t>(p)] ==
                              labels[static_cast<std::size_t>(w)][static_cast<std::size_t>(p)]);
                }
            }
        }
    }
}

TEST_CASE("kappa transform on the two-loop vertex reaches the other Euler circuit") {
    const FourRegularGraph g = two_loop_graph();
    const EulerSystem c = euler_system(g);
    const EulerSystem cv = kappa_transform(g, c, 0);
    CHECK(cv.size() == 1);
    CHECK(!(cv == c));
    CHECK(kappa_transform(g, cv, 0) == c);
}

TEST_CASE("kappa transform reverses a subword: abcabc at a gives acbabc") {
    const auto [g, c] = graph_from_family(parse_dow("a b c a b c"));
    const EulerSystem ca = kappa_transform(g, c, 0);
    const DowFamily expected = canonical_family(parse_dow("a c b a b c"));
    CHECK(family_from_euler_system(g, ca) == expected);
}

TEST_CASE("interlacement of kappa transform is a simple local complement") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const FourRegularGraph g = random_four_regular(1 + static_cast<int>(rng() % 7), rng);
        const EulerSystem c = euler_system(g);
        const SimpleGraph ic = interlacement(g, c);
        for (int v = 0; v < g.num_vertices(); ++v)
            CHECK(graphs_adjacency_equal(interlacement(g, kappa_transform(g, c, v)),
                                         local_complement(ic, v)));
    }
}

TEST_CASE("changing one vertex of a transversal shifts |P| by at most one") {
    // among the three choices at a fixed vertex the sizes form {k, k, k+1}
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const FourRegularGraph g = random_four_regular(n, rng);
        for (std::uint64_t idx = 0; idx < transversal_count(n); ++idx) {
            Transversal t = transversal_from_index(idx, n);
            for (int v = 0; v < n; ++v) {
                std::multiset<int> sizes;
                for (int p = 0; p < 3; ++p) {
                    t[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(p);
                    sizes.insert(count_circuits(g, t));
                }
                const int k = *sizes.begin();
                CHECK(sizes == std::multiset<int>{k, k, k + 1});
            }
        }
    }
}

TEST_CASE("detachment of abcabc at c along phi gives the abab graph") {
    const auto [g, c] = graph_from_family(parse_dow("a b c a b c"));
    const auto labels = transition_labels(g, c);
    const int phi_c = pairing_with_label(labels, 2, TransitionLabel::phi);
    const Detached d = detachment(g, {2, phi_c});
    CHECK(d.graph.num_vertices() == 2);
    CHECK(d.discarded_free_arcs == 0);
    const DowFamily w = family_from_euler_system(d.graph, euler_system(d.graph));
    CHECK(word_pattern(w.words.at(0)) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("detaching the two-loop vertex empties the graph") {
    const FourRegularGraph g = two_loop_graph();
    const EulerSystem c = euler_system(g);
    const auto labels = transition_labels(g, c);
    const Detached d =
        detachment(g, {0, pairing_with_label(labels, 0, TransitionLabel::phi)});
    CHECK(d.graph.num_vertices() == 0);
    CHECK(d.discarded_free_arcs == 1); // the two loops concatenate into one closed arc
    const Detached d2 =
        detachment(g, {0, pairing_with_label(labels, 0, TransitionLabel::chi)});
    CHECK(d2.discarded_free_arcs == 2); // each loop closes on itself
}

TEST_CASE("detaching every vertex terminates with the empty graph") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        FourRegularGraph g = random_four_regular(1 + static_cast<int>(rng() % 6), rng);
        while (g.num_vertices() > 0) {
            const int pairing = static_cast<int>(rng() % 3);
            g = detachment(g, {0, pairing}).graph;
        }
        CHECK(g.num_vertices() == 0);
    }
}

TEST_CASE("connected sum of two two-loop graphs is the aabb graph") {
    const FourRegularGraph g1 = two_loop_graph();
    const FourRegularGraph g2 = two_loop_graph();
    const FourRegularGraph sum = connected_sum(g1, 0, g2, 0, 0);
    CHECK(sum.num_vertices() == 2);
    CHECK(sum.num_components() == 1);
    CHECK(sum.num_components() == g1.num_components() + g2.num_components() - 1);
    const DowFamily w = family_from_euler_system(sum, euler_system(sum));
    CHECK(word_pattern(w.words.at(0)) == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("connected sum combines the circuit-size profiles") {
    // |P| - c(F) is n - r(tau(P)) and the move preserves the rank function, so
    // the profile of the sum is the convolution of the parts' profiles
    std::mt19937_64 rng(71);
    auto profile = [](const FourRegularGraph& g) {
        std::multiset<int> sizes;
        for (std::uint64_t idx = 0; idx < transversal_count(g.num_vertices()); ++idx)
            sizes.insert(count_circuits(g, transversal_from_index(idx, g.num_vertices())) -
                         g.num_components());
        return sizes;
    };
    for (int trial = 0; trial < 8; ++trial) {
        const FourRegularGraph g1 = random_four_regular(1 + static_cast<int>(rng() % 3), rng);
        const FourRegularGraph g2 = random_four_regular(1 + static_cast<int>(rng() % 3), rng);
        const int e1 = static_cast<int>(rng() % g1.num_edges());
        const int e2 = static_cast<int>(rng() % g2.num_edges());
        const FourRegularGraph sum = connected_sum(g1, e1, g2, e2, static_cast<int>(rng() % 2));
        CHECK(sum.num_components() == g1.num_components() + g2.num_components() - 1);
        std::multiset<int> combined;
        for (int a : profile(g1))
            for (int b : profile(g2)) combined.insert(a + b);
        CHECK(profile(sum) == combined);
    }
}

TEST_CASE("separation undoes the aabb bridge") {
    const auto [g, c] = graph_from_family(parse_dow("a a b b"));
    // edges: (0,7) loopless bridge, (1,2) loop at a, (3,4) bridge, (5,6) loop at b
    const FourRegularGraph split = separation(g, 0, 2);
    CHECK(split.num_components() == 2);
    CHECK(split.num_vertices() == 2);
    // each component is a two-loop vertex
    const EulerSystem es = euler_system(split);
    CHECK(es.size() == 2);
    for (const auto& circuit : es.partition.circuits) CHECK(circuit.length() == 2);
}

TEST_CASE("separation rejects non-cuts") {
    const auto [g, c] = graph_from_family(parse_dow("a b a b"));
    CHECK_THROWS_AS(separation(g, 0, 1), input_error);
    CHECK_THROWS_AS(separation(g, 0, 0), input_error);
}

TEST_CASE("separating a connected sum restores the disjoint union") {
    const FourRegularGraph g1 = two_loop_graph();
    const FourRegularGraph g2 = two_loop_graph();
    // join the (0,1) loops: the new edges are (0,4) and (1,5), edge indices 0,1
    const FourRegularGraph sum = connected_sum(g1, 0, g2, 0, 0);
    const FourRegularGraph split = separation(sum, 0, 1);
    CHECK(split.num_components() == 2);
    const auto edges = split.edges();
    const std::vector<std::pair<int, int>> expected{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    CHECK(edges == expected);
}

TEST_CASE("balanced mutation with identity reattachment is the identity") {
    const auto [g, c] = graph_from_family(parse_dow("a b a b"));
    // the four parallel edges form a 4-edge cut between {a} and {b}
    const FourRegularGraph same = balanced_mutation(g, {0, 1}, {2, 3}, false, false);
    CHECK(same == g);
}

TEST_CASE("balanced mutation preserves the circuit-size profile") {
    const auto [g, c] = graph_from_family(parse_dow("a b a b"));
    for (int swap1 = 0; swap1 < 2; ++swap1)
        for (int swap2 = 0; swap2 < 2; ++swap2) {
            const FourRegularGraph mutated =
                balanced_mutation(g, {0, 1}, {2, 3}, swap1 != 0, swap2 != 0);
            std::multiset<int> before, after;
            for (std::uint64_t idx = 0; idx < transversal_count(2); ++idx) {
                before.insert(count_circuits(g, transversal_from_index(idx, 2)) -
                              g.num_components());
                after.insert(count_circuits(mutated, transversal_from_index(idx, 2)) -
                             mutated.num_components());
            }
            CHECK(before == after);
        }
}

TEST_CASE("balanced mutation around one vertex of the doubled triangle") {
    const auto [g, c] = graph_from_family(parse_dow("a b c a b c"));
    // edges 0..3 are the four edges at vertex a: a valid 4-cut
    const FourRegularGraph mutated = balanced_mutation(g, {0, 1}, {2, 3}, true, false);
    CHECK(mutated.num_vertices() == 3);
    // removing edges {0,1,2} and one b-c edge leaves everything connected
    CHECK_THROWS_AS(balanced_mutation(g, {0, 1}, {2, 4}, true, false), input_error);
}

TEST_CASE("touch graph shapes") {
    const FourRegularGraph g = two_loop_graph();
    const auto labels = transition_labels(g, euler_system(g));
    const int chi = pairing_with_label(labels, 0, TransitionLabel::chi);
    const TouchGraph split = touch_graph(g, trace_partition(g, uniform_transversal(1, chi)));
    CHECK(split.num_vertices == 2);
    REQUIRE(split.edges.size() == 1);
    CHECK(split.edges[0].u != split.edges[0].v);

    // Euler system: one touch vertex, all loops
    const TouchGraph euler_touch = touch_graph(g, euler_system(g).partition);
    CHECK(euler_touch.num_vertices == 1);
    CHECK(euler_touch.edges[0].u == euler_touch.edges[0].v);

    // abab with one phi and one chi: 2 touch vertices joined by 2 parallel edges
    const auto [gab, cab] = graph_from_family(parse_dow("a b a b"));
    const auto labels_ab = transition_labels(gab, cab);
    Transversal t(2);
    t[0] = static_cast<std::uint8_t>(pairing_with_label(labels_ab, 0, TransitionLabel::phi));
    t[1] = static_cast<std::uint8_t>(pairing_with_label(labels_ab, 1, TransitionLabel::chi));
    const CircuitPartition p = trace_partition(gab, t);
    REQUIRE(p.size() == 2);
    const TouchGraph parallel = touch_graph(gab, p);
    CHECK(parallel.num_vertices == 2);
    REQUIRE(parallel.edges.size() == 2);
    for (const auto& e : parallel.edges) CHECK(e.u != e.v);
}

TEST_CASE("balanced orientation splits every vertex two and two") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 15; ++trial) {
        const FourRegularGraph g = random_four_regular(1 + static_cast<int>(rng() % 7), rng);
        const BalancedOrientation o = balanced_orientation(g);
        CHECK(is_balanced(g, o));
        BalancedOrientation reversed = o;
        for (auto& bit : reversed) bit ^= 1;
        CHECK(is_balanced(g, reversed));
    }
}

TEST_CASE("Euler orientation makes phi and chi direction-respecting") {
    const auto [g, c] = graph_from_family(parse_dow("a b c a b c"));
    const BalancedOrientation o = balanced_orientation(g);
    const auto labels = transition_labels(g, euler_system(g));
    for (int v = 0; v < g.num_vertices(); ++v) {
        // a pairing respects the orientation iff it pairs initial with terminal
        auto respects = [&](int pairing) {
            for (int s = 0; s < 4; ++s)
                if (o[static_cast<std::size_t>(4 * v + s)] ==
                    o[static_cast<std::size_t>(4 * v + pairing_partner(pairing, s))])
                    return false;
            return true;
        };
        CHECK(respects(pairing_with_label(labels, v, TransitionLabel::phi)));
        CHECK(respects(pairing_with_label(labels, v, TransitionLabel::chi)));
        CHECK(!respects(pairing_with_label(labels, v, TransitionLabel::psi)));
    }
}

TEST_CASE("planarity of the named graphs") {
    CHECK(is_planar(abab_graph()).result == Planarity::yes);
    CHECK(is_planar(abcabc_graph()).result == Planarity::yes);
    CHECK(is_planar(k5_graph()).result == Planarity::no);
    CHECK(is_planar(k5_graph(), 1).result == Planarity::budget_exceeded);
}

TEST_CASE("orbit planarity agrees with the dual-pair scan") {
    std::mt19937_64 rng(97);
    CHECK(is_planar_dual_pair_scan(abab_graph()));
    CHECK(!is_planar_dual_pair_scan(k5_graph()));
    for (int trial = 0; trial < 12; ++trial) {
        const FourRegularGraph g = random_four_regular(1 + static_cast<int>(rng() % 4), rng);
        CHECK((is_planar(g).result == Planarity::yes) == is_planar_dual_pair_scan(g));
    }
}

TEST_CASE("transversal digit helpers") {
    CHECK(transversal_digits(parse_transversal("012", 3)) == "012");
    CHECK(transversal_to_index(parse_transversal("012", 3)) == 0 + 1 * 3 + 2 * 9);
    CHECK(transversal_from_index(21, 3) == parse_transversal("012", 3));
    CHECK_THROWS_AS(parse_transversal("013", 3), input_error);
    CHECK_THROWS_AS(parse_transversal("01", 3), input_error);
    CHECK(transversal_count(8) == 6561);
}
