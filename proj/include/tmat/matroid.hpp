#ifndef TMAT_MATROID_HPP
#define TMAT_MATROID_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tmat/gf2.hpp"
#include "tmat/graph.hpp"

namespace tmat {

/// Binary matroid over a labeled ground set: one rep column per element,
/// rank(A) = GF(2) rank of the selected columns. Ground sets stay <= 64
/// elements at desk scale so subsets travel as bitmasks.
struct BinaryMatroid {
    std::vector<std::string> ground;
    gf2::BitMatrix rep;

    int size() const { return static_cast<int>(ground.size()); }
    int index_of(const std::string& label) const; // throws input_error
    std::uint64_t full_mask() const;
};

int rank(const BinaryMatroid& m, std::uint64_t subset_mask);
int rank(const BinaryMatroid& m, std::span<const int> subset);
int rank_full(const BinaryMatroid& m);

/// Rank functions agree on every subset under the bijection
/// (bijection[i] = index in m2 of m1's element i). Exhaustive 2^size sweep;
/// throws budget_error past `exhaustive_limit` elements.
bool same_rank_function(const BinaryMatroid& m1, const BinaryMatroid& m2,
                        std::span<const int> bijection, int exhaustive_limit = 18);

/// Dual matroid: rep rows span the orthogonal complement of m's row space.
BinaryMatroid dual(const BinaryMatroid& m);

/// Restriction to the selected columns (ground order = selection order).
BinaryMatroid restrict_to(const BinaryMatroid& m, std::span<const int> subset);
BinaryMatroid restrict_to(const BinaryMatroid& m, std::uint64_t subset_mask);

/// Multigraph with labeled edges (loops allowed), input of cycle matroids.
struct Multigraph {
    int num_vertices = 0;
    struct Edge {
        int u, v;
        std::string label;
    };
    std::vector<Edge> edges;
};
Multigraph to_multigraph(const TouchGraph& t, const FourRegularGraph& g);

/// GF(2) vertex-edge incidence matroid; a loop becomes a zero column.
BinaryMatroid cycle_matroid(const Multigraph& g);

/// The transition matroid M_tau(F), represented by (I | A | I+A) for the
/// interlacement graph A of an Euler system. Columns are indexed by the
/// transitions of F in label-block order (all phi, all chi, all psi);
/// `columns` carries the underlying slot pairings, which identify the
/// ground set with T(F) independently of the Euler system used.
struct TransitionMatroid {
    BinaryMatroid matroid;
    std::vector<TransitionId> columns;          // per column
    std::vector<TransitionLabel> column_labels; // per column, relative to the Euler system
    int n = 0;                                  // vertices of F

    int column_of(TransitionId t) const;
    std::uint64_t transversal_mask(const Transversal& t) const;
    /// Ground permutation mapping this matroid's columns to `other`'s columns
    /// through the pairing identity on T(F).
    std::vector<int> pairing_bijection_to(const TransitionMatroid& other) const;

private:
    friend TransitionMatroid transition_matroid(const FourRegularGraph&, const EulerSystem&);
    std::vector<int> column_index_; // [vertex*3 + pairing] -> column
};

TransitionMatroid transition_matroid(const FourRegularGraph& g, const EulerSystem& c);

/// Remove the vertex triple of v by contracting the kept transition and
/// deleting the other two; equals the transition matroid of the detachment.
BinaryMatroid detach_minor(const TransitionMatroid& m, int vertex, int kept_pairing);

/// Theorem: the cycle matroid of Tch(P) and the dual of the restriction of
/// M_tau(F) to tau(P) define the same matroid on V(F).
bool verify_touch_duality(const FourRegularGraph& g, const Transversal& t);

struct DualPairReport {
    int r1 = 0;
    int r2 = 0;
    bool is_dual_pair = false;
    bool consistency_ok = true; // rank identities the theorems force
    std::string detail;
};

/// Rank report for two everywhere-disjoint circuit partitions; when they form
/// a dual pair, also verifies restriction duality on V(F) and direct-sum rank
/// additivity, flagging any discrepancy as an internal consistency failure.
DualPairReport check_dual_pair(const FourRegularGraph& g, const Transversal& t1,
                               const Transversal& t2);

/// Dump format: "ground:" line with labels, then rep rows as 0/1 strings.
std::string dump(const BinaryMatroid& m);

} // namespace tmat

#endif
