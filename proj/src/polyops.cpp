#include "tmat/polyops.hpp"

#include <functional>
#include <future>
#include <map>

#include "tmat/errors.hpp"

namespace tmat {

namespace {

SparsePoly zeta_minus_one() { return SparsePoly::variable("zeta") - SparsePoly(1); }

SparsePoly from_size_counts(const std::map<int, BigInt>& count_by_size, int shift) {
    // sum of count * (zeta-1)^(size+shift)
    SparsePoly result;
    const SparsePoly base = zeta_minus_one();
    for (const auto& [size, count] : count_by_size) {
        if (size + shift < 0) throw input_error("martin: empty graph has no Las Vergnas normalization");
        result += SparsePoly(count) * base.pow(size + shift);
    }
    return result;
}

// partition [0, count) into ranges, run body over each, merge partial
// size-counts in range order
std::map<int, BigInt> counted_sweep(std::uint64_t count, int workers,
                                    const std::function<std::map<int, BigInt>(std::uint64_t, std::uint64_t)>& body) {
    if (workers < 1) workers = 1;
    if (workers == 1 || count < 2) return body(0, count);
    std::vector<std::future<std::map<int, BigInt>>> futures;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = count * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        const std::uint64_t hi = count * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        futures.push_back(std::async(std::launch::async, [&body, lo, hi] { return body(lo, hi); }));
    }
    std::map<int, BigInt> merged;
    for (auto& f : futures)
        for (const auto& [k, v] : f.get()) merged[k] += v;
    return merged;
}

constexpr std::uint64_t kMaxTransversalSweep = std::uint64_t{1} << 25;

void check_sweep_budget(const FourRegularGraph& g) {
    if (transversal_count(g.num_vertices()) > kMaxTransversalSweep)
        throw budget_error("transversal sweep: 3^n exceeds the enumeration budget");
}

} // namespace

TutteWeights TutteWeights::ones(int size) {
    TutteWeights w;
    w.per_element.assign(static_cast<std::size_t>(size), {SparsePoly(1), SparsePoly(1)});
    return w;
}

SparsePoly tutte_eval(const BinaryMatroid& m, const TutteWeights& w, int subset_cap_log2) {
    if (static_cast<int>(w.per_element.size()) != m.size())
        throw input_error("tutte_eval: weight arity mismatch");
    if (m.size() > subset_cap_log2)
        throw budget_error("tutte_eval: ground too large for unrestricted mode");
    const int n = m.size();
    const int rank_s = rank_full(m);
    const SparsePoly xm1 = SparsePoly::variable("x") - SparsePoly(1);
    const SparsePoly ym1 = SparsePoly::variable("y") - SparsePoly(1);
    std::vector<SparsePoly> xpow(static_cast<std::size_t>(rank_s + 1)), ypow(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= rank_s; ++k) xpow[static_cast<std::size_t>(k)] = xm1.pow(k);
    for (int k = 0; k <= n; ++k) ypow[static_cast<std::size_t>(k)] = ym1.pow(k);

    SparsePoly total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        SparsePoly weight(1);
        int cardinality = 0;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1) {
                weight *= w.per_element[static_cast<std::size_t>(i)].first;
                ++cardinality;
            } else {
                weight *= w.per_element[static_cast<std::size_t>(i)].second;
            }
        }
        if (weight.is_zero()) continue;
        const int r = rank(m, mask);
        total += weight * xpow[static_cast<std::size_t>(rank_s - r)] *
                 ypow[static_cast<std::size_t>(cardinality - r)];
    }
    return total;
}

SparsePoly tutte_eval_transversals(const TransitionMatroid& m, const TutteWeights& w) {
    if (static_cast<int>(w.per_element.size()) != m.matroid.size())
        throw input_error("tutte_eval_transversals: weight arity mismatch");
    const int n = m.n;
    if (transversal_count(n) > kMaxTransversalSweep)
        throw budget_error("tutte_eval_transversals: 3^n exceeds the enumeration budget");
    const SparsePoly xm1 = SparsePoly::variable("x") - SparsePoly(1);
    const SparsePoly ym1 = SparsePoly::variable("y") - SparsePoly(1);
    std::vector<SparsePoly> xpow(static_cast<std::size_t>(n + 1)), ypow(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        xpow[static_cast<std::size_t>(k)] = xm1.pow(k);
        ypow[static_cast<std::size_t>(k)] = ym1.pow(k);
    }

    SparsePoly total;
    const std::uint64_t count = transversal_count(n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Transversal t = transversal_from_index(idx, n);
        const std::uint64_t mask = m.transversal_mask(t);
        SparsePoly weight(1);
        for (int col = 0; col < m.matroid.size(); ++col)
            weight *= ((mask >> col) & 1) ? w.per_element[static_cast<std::size_t>(col)].first
                                          : w.per_element[static_cast<std::size_t>(col)].second;
        if (weight.is_zero()) continue;
        const int r = rank(m.matroid, mask);
        total += weight * xpow[static_cast<std::size_t>(n - r)] * ypow[static_cast<std::size_t>(n - r)];
    }
    return total;
}

SparsePoly martin_direct(const FourRegularGraph& g, int workers) {
    check_sweep_budget(g);
    const int n = g.num_vertices();
    const auto counts = counted_sweep(
        transversal_count(n), workers, [&g, n](std::uint64_t lo, std::uint64_t hi) {
            std::map<int, BigInt> local;
            for (std::uint64_t idx = lo; idx < hi; ++idx)
                local[count_circuits(g, transversal_from_index(idx, n))] += 1;
            return local;
        });
    return from_size_counts(counts, -1);
}

SparsePoly martin_via_matroid(const FourRegularGraph& g) {
    check_sweep_budget(g);
    const int n = g.num_vertices();
    const int c = g.num_components();
    const TransitionMatroid tm = transition_matroid(g, euler_system(g));
    std::map<int, BigInt> counts; // keyed by |P| reconstructed as n - r + c
    const std::uint64_t count = transversal_count(n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const std::uint64_t mask = tm.transversal_mask(transversal_from_index(idx, n));
        counts[n - rank(tm.matroid, mask)] += 1;
    }
    // sum of (zeta-1)^{n-r} times the normalizer (zeta-1)^{c-1}
    SparsePoly result;
    const SparsePoly base = zeta_minus_one();
    for (const auto& [nullity, cnt] : counts) result += SparsePoly(cnt) * base.pow(nullity);
    if (c < 1) throw input_error("martin: empty graph has no Las Vergnas normalization");
    return result * base.pow(c - 1);
}

SparsePoly martin_checked(const FourRegularGraph& g) {
    const SparsePoly direct = martin_direct(g);
    const SparsePoly via_matroid = martin_via_matroid(g);
    if (!(direct == via_matroid))
        throw consistency_error("Martin polynomial routes disagree: direct=" + direct.pretty() +
                                " matroid=" + via_matroid.pretty());
    return direct;
}

SparsePoly directed_martin(const FourRegularGraph& g, const BalancedOrientation& o) {
    if (!is_balanced(g, o)) throw input_error("directed_martin: orientation not balanced");
    check_sweep_budget(g);
    const int n = g.num_vertices();
    // the violating transition at v pairs the two initial slots
    std::vector<std::array<std::uint8_t, 2>> respecting(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int init_a = -1, init_b = -1;
        for (int s = 0; s < 4; ++s)
            if (o[static_cast<std::size_t>(4 * v + s)]) (init_a == -1 ? init_a : init_b) = s;
        const int violating = pairing_joining(init_a, init_b);
        int k = 0;
        for (int p = 0; p < 3; ++p)
            if (p != violating)
                respecting[static_cast<std::size_t>(v)][static_cast<std::size_t>(k++)] =
                    static_cast<std::uint8_t>(p);
    }
    std::map<int, BigInt> counts;
    Transversal t(static_cast<std::size_t>(n), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int v = 0; v < n; ++v)
            t[static_cast<std::size_t>(v)] =
                respecting[static_cast<std::size_t>(v)][(mask >> v) & 1];
        counts[count_circuits(g, t)] += 1;
    }
    return from_size_counts(counts, -1);
}

TransitionWeights TransitionWeights::ones(int n) {
    TransitionWeights w;
    w.weight.assign(static_cast<std::size_t>(n), {BigInt(1), BigInt(1), BigInt(1)});
    return w;
}

SparsePoly transition_poly(const FourRegularGraph& g, const TransitionWeights& w, int workers) {
    if (static_cast<int>(w.weight.size()) != g.num_vertices())
        throw input_error("transition_poly: weight arity mismatch");
    check_sweep_budget(g);
    const int n = g.num_vertices();
    const int c = g.num_components();
    const auto coeff_by_exponent = counted_sweep(
        transversal_count(n), workers, [&](std::uint64_t lo, std::uint64_t hi) {
            std::map<int, BigInt> local;
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                const Transversal t = transversal_from_index(idx, n);
                BigInt product = 1;
                for (int v = 0; v < n; ++v)
                    product *= w.weight[static_cast<std::size_t>(v)][t[static_cast<std::size_t>(v)]];
                if (product == 0) continue;
                local[count_circuits(g, t) - c] += product;
            }
            return local;
        });
    SparsePoly result;
    for (const auto& [exponent, coeff] : coeff_by_exponent)
        result += SparsePoly(coeff) * SparsePoly::variable("y").pow(exponent);
    return result;
}

SparsePoly interlace_poly(const SimpleGraph& h) {
    const int n = h.size();
    if (n > 20) throw budget_error("interlace_poly: more than 20 vertices");
    std::map<int, BigInt> counts; // exponent |S| - rank -> count
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        const int r = gf2::rank_of_principal_submatrix(h.adj, mask);
        counts[size - r] += 1;
    }
    SparsePoly result;
    const SparsePoly base = SparsePoly::variable("x") - SparsePoly(1);
    for (const auto& [exponent, count] : counts) result += SparsePoly(count) * base.pow(exponent);
    return result;
}

} // namespace tmat
