#ifndef TMAT_GRAPH_HPP
#define TMAT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tmat/gf2.hpp"

namespace tmat {

// The three slot pairings at a vertex, globally indexed:
//   t0 = {01|23}, t1 = {02|13}, t2 = {03|12}.
// Within pairing p, the partner of slot s is s ^ (p+1), and the pairing
// joining distinct slots a,b is (a^b) - 1.
inline int pairing_partner(int pairing, int slot) { return slot ^ (pairing + 1); }
inline int pairing_joining(int slot_a, int slot_b) { return (slot_a ^ slot_b) - 1; }

/// One transition: a slot pairing at a vertex. Element of T(F).
struct TransitionId {
    int vertex;
    int pairing; // 0..2
    bool operator==(const TransitionId&) const = default;
    auto operator<=>(const TransitionId&) const = default;
};

/// One pairing index per vertex, in vertex order.
using Transversal = std::vector<std::uint8_t>;

/// Raw parsed graph: vertex declarations plus edges between (vertex, slot)
/// endpoints. May violate 4-regularity; validate() reports how.
struct GraphSpec {
    struct Endpoint {
        int vertex;
        int slot;
    };
    std::vector<std::string> vertices;
    std::vector<std::pair<Endpoint, Endpoint>> edges;
};

/// A 4-regular graph in half-edge form. Half-edge h lives at vertex h/4,
/// slot h%4; mate(h) is the other half-edge of its edge. Immutable after
/// construction; all operations on it are pure.
class FourRegularGraph {
public:
    FourRegularGraph() = default;

    /// Validating constructor; throws input_error unless the spec is 4-regular.
    static FourRegularGraph build(const GraphSpec& spec);

    /// Assemble directly from a mate involution over half-edges (checked).
    static FourRegularGraph from_mate(std::vector<std::string> names, std::vector<int> mate);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_half_edges() const { return 4 * num_vertices(); }
    int num_edges() const { return 2 * num_vertices(); }
    int mate(int h) const { return mate_[static_cast<std::size_t>(h)]; }

    const std::string& vertex_name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    int vertex_index(const std::string& name) const; // throws input_error

    /// Edges as (h, mate(h)) with h < mate(h), ordered by h. The position in
    /// this list is the edge's index.
    std::vector<std::pair<int, int>> edges() const;

    int num_components() const;
    std::vector<int> component_of_vertex() const;

    std::string half_edge_name(int h) const; // "<vertex>.<slot>"

    bool operator==(const FourRegularGraph&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<int> mate_;
};

/// Check the 4-regularity invariants of a raw spec. Empty result means ok;
/// otherwise each message pinpoints a violation (first-violated slot first).
std::vector<std::string> validate(const GraphSpec& spec);

/// Graph text format (".frg"): '#' comments, one "v <name>" per vertex
/// (declaration order fixes indices), one "e <name>.<slot> <name>.<slot>"
/// per edge.
GraphSpec parse_frg(std::istream& in);
GraphSpec parse_frg(const std::string& text);
std::string to_frg(const FourRegularGraph& g);

/// A traced circuit: cyclic half-edge sequence [d0, a0, d1, a1, ...] where
/// d/a alternate departures and arrivals, a_i = mate(d_i), and a_i, d_{i+1}
/// share the transition at their vertex. Canonical form: lexicographically
/// minimal over rotations by whole edges and reversal.
struct Circuit {
    std::vector<int> half_edges;
    int length() const { return static_cast<int>(half_edges.size()) / 2; }
    bool operator==(const Circuit&) const = default;
};

struct CircuitPartition {
    std::vector<Circuit> circuits; // canonical forms, sorted
    Transversal transversal;
    int size() const { return static_cast<int>(circuits.size()); }
    bool operator==(const CircuitPartition&) const = default;
};

/// An Euler system: one covering circuit per connected component.
struct EulerSystem {
    CircuitPartition partition;
    int size() const { return partition.size(); }
    bool operator==(const EulerSystem&) const = default;
};

CircuitPartition trace_partition(const FourRegularGraph& g, const Transversal& t);

/// Count circuits without materializing them (hot path of the 3^n sweeps).
int count_circuits(const FourRegularGraph& g, const Transversal& t);

/// Deterministic Euler system: Hierholzer splice, lowest-index start,
/// lowest-slot exit.
EulerSystem euler_system(const FourRegularGraph& g);

/// Kotzig's kappa-transform C*v: the Euler system that uses the
/// orientation-inconsistent transition of C at v and agrees with C elsewhere
/// (equivalently, one v-to-v walk of C reversed).
EulerSystem kappa_transform(const FourRegularGraph& g, const EulerSystem& c, int v);

/// Loop-free graph with GF(2) adjacency matrix; holds interlacement graphs.
struct SimpleGraph {
    std::vector<std::string> names;
    gf2::BitMatrix adj; // symmetric, zero diagonal
    int size() const { return static_cast<int>(names.size()); }
    bool adjacent(int i, int j) const { return adj.get(i, j); }
};

/// Interlacement graph I(C): v,w adjacent iff they alternate v..w..v..w
/// along a circuit of C.
SimpleGraph interlacement(const FourRegularGraph& g, const EulerSystem& c);

/// Simple local complementation at v: toggle adjacency between distinct
/// neighbors of v.
SimpleGraph local_complement(const SimpleGraph& h, int v);

bool is_bipartite(const SimpleGraph& h);

enum class TransitionLabel : std::uint8_t { phi, chi, psi };

/// labels[v][pairing] = role of that pairing relative to C.
std::vector<std::array<TransitionLabel, 3>> transition_labels(const FourRegularGraph& g,
                                                              const EulerSystem& c);

/// Pairing index carrying the given label at v.
int pairing_with_label(const std::vector<std::array<TransitionLabel, 3>>& labels, int v,
                       TransitionLabel want);

/// Detachment (splitting) along one transition: the vertex is removed and
/// half-edges re-joined per the pairing; vertex-free closed arcs are
/// discarded (their count is reported).
struct Detached {
    FourRegularGraph graph;
    int discarded_free_arcs = 0;
    std::vector<int> new_vertex_index; // old vertex -> new index, -1 for the removed one
};
Detached detachment(const FourRegularGraph& g, TransitionId t);

/// Connected sum along e1 in g1 and e2 in g2 (edge indices); `matching`
/// selects which of the two half-edge pairings is used (0 or 1). Result
/// vertices: g1's then g2's.
FourRegularGraph connected_sum(const FourRegularGraph& g1, int e1, const FourRegularGraph& g2,
                               int e2, int matching);

/// Inverse of connected sum: {e1,e2} must be a 2-edge cut; the component
/// count increases by exactly one.
FourRegularGraph separation(const FourRegularGraph& g, int e1, int e2);

/// Balanced mutation: the four edges (grouped into two pairs) must form an
/// edge cut; each pair's half-edges are optionally re-crossed.
FourRegularGraph balanced_mutation(const FourRegularGraph& g, std::pair<int, int> pair1,
                                   std::pair<int, int> pair2, bool swap1, bool swap2);

/// Touch-graph Tch(P): a vertex per circuit of P, an edge per vertex of F
/// (a loop when one circuit passes twice).
struct TouchGraph {
    int num_vertices = 0;
    struct Edge {
        int u, v;         // touch-vertices = circuit indices
        int graph_vertex; // label: the vertex of F
    };
    std::vector<Edge> edges; // in vertex order of F
};
TouchGraph touch_graph(const FourRegularGraph& g, const CircuitPartition& p);

/// initial[h] == true when h is the initial (outgoing) half-edge of its edge.
/// Balanced: two initial and two terminal slots at every vertex.
using BalancedOrientation = std::vector<std::uint8_t>;

BalancedOrientation balanced_orientation(const FourRegularGraph& g);
bool is_balanced(const FourRegularGraph& g, const BalancedOrientation& o);

enum class Planarity { yes, no, budget_exceeded };
struct PlanarityAnswer {
    Planarity result;
    std::size_t states_explored = 0;
};

/// Planarity via the bipartite-interlacement criterion: breadth-first search
/// of the local-complementation orbit of I(euler_system(g)) with
/// canonical-form deduplication, stopping at the first bipartite member.
PlanarityAnswer is_planar(const FourRegularGraph& g, std::size_t cap = 1000000);

/// Independent planarity oracle: scan all disjoint transversal pairs for one
/// satisfying the dual-pair rank condition, via the circuit-nullity formula
/// (|P1|+|P2| == n + 2c). Exponential; intended for small n.
bool is_planar_dual_pair_scan(const FourRegularGraph& g);

/// Enumeration of all 3^n transversals in base-3 order.
std::uint64_t transversal_count(int n); // 3^n
Transversal transversal_from_index(std::uint64_t index, int n);
std::uint64_t transversal_to_index(const Transversal& t);

/// Base-3 digit string in vertex order, e.g. "012".
Transversal parse_transversal(const std::string& digits, int n);
std::string transversal_digits(const Transversal& t);

} // namespace tmat

#endif
