#ifndef TMAT_POLYOPS_HPP
#define TMAT_POLYOPS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tmat/graph.hpp"
#include "tmat/matroid.hpp"
#include "tmat/poly.hpp"

namespace tmat {

/// (alpha, beta) weight per ground element, aligned with matroid columns.
struct TutteWeights {
    std::vector<std::pair<SparsePoly, SparsePoly>> per_element;
    static TutteWeights ones(int size);
};

/// Parametrized Tutte polynomial in (x, y):
///   sum over subsets A of alpha(A) beta(S-A) (x-1)^{r(S)-r(A)} (y-1)^{|A|-r(A)}.
/// Unrestricted mode sums over all 2^|ground| subsets (budget cap).
SparsePoly tutte_eval(const BinaryMatroid& m, const TutteWeights& w, int subset_cap_log2 = 20);

/// Restricted mode: the sum runs over the 3^n transversals of the vertex
/// triples only (the quotient that kills terms with two alphas or three
/// betas at a vertex).
SparsePoly tutte_eval_transversals(const TransitionMatroid& m, const TutteWeights& w);

/// Las Vergnas Martin polynomial sum over circuit partitions of (zeta-1)^{|P|-1},
/// computed by tracing all 3^n transversals. No matroid machinery.
SparsePoly martin_direct(const FourRegularGraph& g, int workers = 1);

/// Same polynomial through the transition matroid: exponent |P|-c(F) is
/// n - r(tau(P)), normalized by (zeta-1)^{c(F)-1}.
SparsePoly martin_via_matroid(const FourRegularGraph& g);

/// Both Martin routes with the equality the theorem forces; throws
/// consistency_error when they disagree.
SparsePoly martin_checked(const FourRegularGraph& g);

/// Directed Martin polynomial of a balanced orientation: the sum is over the
/// 2^n transversals that avoid every direction-violating transition.
SparsePoly directed_martin(const FourRegularGraph& g, const BalancedOrientation& o);

/// Integer weight per transition, indexed [vertex][pairing].
struct TransitionWeights {
    std::vector<std::array<BigInt, 3>> weight;
    static TransitionWeights ones(int n);
};

/// Jaeger-style transition polynomial: sum over transversals of
/// (prod of transition weights) * y^{|P|-c(F)}.
SparsePoly transition_poly(const FourRegularGraph& g, const TransitionWeights& w, int workers = 1);

/// Vertex-nullity interlace polynomial
///   q(h; x) = sum over S of (x-1)^{|S| - rank(adj[S])}.
SparsePoly interlace_poly(const SimpleGraph& h);

} // namespace tmat

#endif
