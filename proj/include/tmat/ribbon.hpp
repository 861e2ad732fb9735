#ifndef TMAT_RIBBON_HPP
#define TMAT_RIBBON_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tmat/graph.hpp"
#include "tmat/poly.hpp"

namespace tmat {

/// Ribbon graph: multigraph with a rotation system (cyclic half-edge order
/// per vertex) and a +1/-1 sign per edge. Half-edges are global ids
/// 0..2|E|-1; edge i owns half-edges via its (h1, h2) ends.
struct RibbonGraph {
    std::vector<std::string> vertex_names;
    std::vector<std::vector<int>> rotation; // half-edge ids, cyclic order per vertex
    struct Edge {
        int h1, h2; // end 0 and end 1
        int sign;   // +1 or -1
        std::string name;
    };
    std::vector<Edge> edges;

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int vertex_of_half_edge(int h) const;
    int edge_of_half_edge(int h) const { return h / 2; }
    int edge_index(const std::string& name) const; // throws input_error
};

/// Ribbon text format: "v <name>: h1 h2 ... hk" rotation lines,
/// "e <name> <h> <h> <sign>" edge lines, '#' comments. Half-edge tokens are
/// names; each must appear exactly once in a rotation and once in an edge.
RibbonGraph parse_ribbon(const std::string& text);
std::string to_ribbon_text(const RibbonGraph& g);

/// Medial 4-regular graph: one vertex per edge of G (named after it), slots
/// = band corners (2*end + corner). delta pairs the corners of each band
/// end (= t0 everywhere); eps pairs the corners joined by a band side
/// (t2 for +1 edges, t1 for -1 edges).
struct Medial {
    FourRegularGraph graph;
    Transversal delta;
    Transversal eps;
    int isolated_disks = 0; // ribbon vertices with no incident half-edge
};
Medial medial(const RibbonGraph& g);

/// Reverse construction: ribbon graph whose disks are the delta-circuits and
/// whose bands are the vertices of f. Requires delta(v) != eps(v) everywhere.
RibbonGraph from_partitions(const FourRegularGraph& f, const Transversal& delta,
                            const Transversal& eps);

/// Boundary curves of the spanning sub-ribbon-graph (V, X): medial vertices
/// of edges outside X are detached along delta, then eps is traced; freed
/// vertex-free arcs and bare disks count as boundary curves.
int boundary_components(const RibbonGraph& g, std::uint32_t edge_mask);
int boundary_components(const RibbonGraph& g); // X = all edges

/// Orientability by direction propagation: medial edge-directions respected
/// by every delta and eps transition exist iff the half-edge constraint
/// graph is bipartite.
bool orientable(const RibbonGraph& g);

/// Independent orientability route: |P_A| != |P_{A-{a}}| for all A and all
/// a in A, over all 2^|E| delta/eps mixtures. Exponential; small |E| only.
bool orientable_by_counts(const RibbonGraph& g);

struct SurfaceInfo {
    int components = 0;
    int disks = 0;            // delta-circuits plus isolated vertices
    int bands = 0;            // edges
    int boundary_curves = 0;  // eps-circuits plus isolated disks
    int euler_characteristic = 0; // of the closed-up surface, summed
    bool orientable = true;
    struct Component {
        int euler_characteristic;
        bool orientable;
        int genus; // orientable genus, or crosscap number when nonorientable
    };
    std::vector<Component> per_component;
};
SurfaceInfo euler_genus(const RibbonGraph& g);

/// Per-edge permutation of the (delta, eps, other) designations, applied in
/// the medial and pulled back. perm[e] = {p0,p1,p2} means the new delta is
/// the old designation p0, the new eps the old p1 (0=delta,1=eps,2=other).
RibbonGraph twisted_dual(const RibbonGraph& g, const std::vector<std::array<int, 3>>& perm);

/// Geometric dual: swap delta and eps everywhere.
RibbonGraph geometric_dual(const RibbonGraph& g);

/// Equality up to the rotation/flip moves, decided by canonicalizing the
/// medial with both transversals. Edges correspond by name.
bool equivalent_ribbon(const RibbonGraph& a, const RibbonGraph& b);

/// Same (graph, delta, eps) triple up to per-vertex slot relabelings that
/// preserve both transversals; vertices correspond by name.
bool equivalent_medial(const Medial& a, const Medial& b);

/// Bollobas-Riordan polynomial
///   R(G) = sum over X of (x-1)^{r(E)-r(X)} y^{|X|-r(X)} z^{k(X)-f(X)+|X|-r(X)}
/// with r from the cycle matroid, k(X) the components of (V,X) and f(X) the
/// boundary count. Budget |E| <= 20.
SparsePoly bollobas_riordan(const RibbonGraph& g);

/// Same expansion with a multiplicative per-edge weight on X.
SparsePoly bollobas_riordan(const RibbonGraph& g, const std::vector<BigInt>& edge_weights);

/// Seeded generator for test corpora.
RibbonGraph random_ribbon(int num_vertices, int num_edges, std::mt19937_64& rng);

} // namespace tmat

#endif
