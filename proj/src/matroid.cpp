#include "tmat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "tmat/errors.hpp"

namespace tmat {

int BinaryMatroid::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (ground[static_cast<std::size_t>(i)] == label) return i;
    throw input_error("unknown ground element: " + label);
}

std::uint64_t BinaryMatroid::full_mask() const {
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

int rank(const BinaryMatroid& m, std::uint64_t subset_mask) {
    if (m.size() < 64 && (subset_mask >> m.size()) != 0)
        throw input_error("rank: subset mask exceeds ground set");
    return gf2::rank_of_columns(m.rep, subset_mask);
}

int rank(const BinaryMatroid& m, std::span<const int> subset) {
    for (int i : subset)
        if (i < 0 || i >= m.size()) throw input_error("rank: element index out of range");
    return gf2::rank_of_columns(m.rep, subset);
}

int rank_full(const BinaryMatroid& m) { return rank(m, m.full_mask()); }

bool same_rank_function(const BinaryMatroid& m1, const BinaryMatroid& m2,
                        std::span<const int> bijection, int exhaustive_limit) {
    if (m1.size() != m2.size()) return false;
    if (static_cast<int>(bijection.size()) != m1.size())
        throw input_error("same_rank_function: bijection arity mismatch");
    if (m1.size() > exhaustive_limit)
        throw budget_error("same_rank_function: ground set exceeds exhaustive limit");
    const int n = m1.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::uint64_t mapped = 0;
        for (std::uint64_t bits = mask; bits; bits &= bits - 1)
            mapped |= std::uint64_t{1} << bijection[static_cast<std::size_t>(std::countr_zero(bits))];
        if (rank(m1, mask) != rank(m2, mapped)) return false;
    }
    return true;
}

BinaryMatroid dual(const BinaryMatroid& m) {
    // null-space basis from the reduced row-echelon form: one row per
    // non-pivot column
    const auto rr = gf2::row_reduce(m.rep);
    const auto& pivots = rr.pivots;
    std::vector<char> is_pivot(static_cast<std::size_t>(m.size()), 0);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    BinaryMatroid d;
    d.ground = m.ground;
    d.rep = gf2::BitMatrix(m.size() - static_cast<int>(pivots.size()), m.size());
    int row = 0;
    for (int f = 0; f < m.size(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        d.rep.set(row, f, true);
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            if (rr.reduced.get(i, f)) d.rep.set(row, pivots[static_cast<std::size_t>(i)], true);
        ++row;
    }
    return d;
}

BinaryMatroid restrict_to(const BinaryMatroid& m, std::span<const int> subset) {
    BinaryMatroid r;
    r.rep = gf2::BitMatrix(m.rep.rows(), static_cast<int>(subset.size()));
    for (int j = 0; j < static_cast<int>(subset.size()); ++j) {
        const int c = subset[static_cast<std::size_t>(j)];
        if (c < 0 || c >= m.size()) throw input_error("restrict_to: element index out of range");
        r.ground.push_back(m.ground[static_cast<std::size_t>(c)]);
        for (int i = 0; i < m.rep.rows(); ++i)
            if (m.rep.get(i, c)) r.rep.set(i, j, true);
    }
    r.rep.col_labels = r.ground;
    return r;
}

BinaryMatroid restrict_to(const BinaryMatroid& m, std::uint64_t subset_mask) {
    std::vector<int> subset;
    for (std::uint64_t bits = subset_mask; bits; bits &= bits - 1)
        subset.push_back(std::countr_zero(bits));
    return restrict_to(m, subset);
}

Multigraph to_multigraph(const TouchGraph& t, const FourRegularGraph& g) {
    Multigraph m;
    m.num_vertices = t.num_vertices;
    for (const auto& e : t.edges) m.edges.push_back({e.u, e.v, g.vertex_name(e.graph_vertex)});
    return m;
}

BinaryMatroid cycle_matroid(const Multigraph& g) {
    BinaryMatroid m;
    m.rep = gf2::BitMatrix(g.num_vertices, static_cast<int>(g.edges.size()));
    for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
        const auto& e = g.edges[static_cast<std::size_t>(j)];
        m.ground.push_back(e.label);
        if (e.u != e.v) {
            m.rep.set(e.u, j, true);
            m.rep.set(e.v, j, true);
        }
    }
    m.rep.col_labels = m.ground;
    return m;
}

TransitionMatroid transition_matroid(const FourRegularGraph& g, const EulerSystem& c) {
    const int n = g.num_vertices();
    const SimpleGraph ic = interlacement(g, c);
    const auto labels = transition_labels(g, c);

    TransitionMatroid tm;
    tm.n = n;
    tm.matroid.rep = gf2::BitMatrix(n, 3 * n);
    tm.columns.resize(static_cast<std::size_t>(3 * n));
    tm.column_labels.resize(static_cast<std::size_t>(3 * n));
    tm.column_index_.assign(static_cast<std::size_t>(3 * n), -1);
    for (int v = 0; v < n; ++v) {
        // columns: phi block = I, chi block = A, psi block = I + A
        tm.matroid.rep.set(v, v, true);
        for (int w = 0; w < n; ++w) {
            if (ic.adjacent(w, v)) {
                tm.matroid.rep.set(w, n + v, true);
                tm.matroid.rep.set(w, 2 * n + v, true);
            }
        }
        tm.matroid.rep.set(v, 2 * n + v, true);
        const int phi = pairing_with_label(labels, v, TransitionLabel::phi);
        const int chi = pairing_with_label(labels, v, TransitionLabel::chi);
        const int psi = pairing_with_label(labels, v, TransitionLabel::psi);
        const std::array<std::pair<int, TransitionLabel>, 3> blocks{
            std::pair{phi, TransitionLabel::phi}, std::pair{chi, TransitionLabel::chi},
            std::pair{psi, TransitionLabel::psi}};
        for (int b = 0; b < 3; ++b) {
            const int col = b * n + v;
            const auto [pairing, label] = blocks[static_cast<std::size_t>(b)];
            tm.columns[static_cast<std::size_t>(col)] = {v, pairing};
            tm.column_labels[static_cast<std::size_t>(col)] = label;
            tm.column_index_[static_cast<std::size_t>(3 * v + pairing)] = col;
        }
    }
    std::vector<std::string> ground(static_cast<std::size_t>(3 * n));
    for (int col = 0; col < 3 * n; ++col) {
        const auto t = tm.columns[static_cast<std::size_t>(col)];
        ground[static_cast<std::size_t>(col)] =
            g.vertex_name(t.vertex) + ":t" + std::to_string(t.pairing);
    }
    tm.matroid.ground = std::move(ground);
    tm.matroid.rep.col_labels = tm.matroid.ground;
    return tm;
}

int TransitionMatroid::column_of(TransitionId t) const {
    if (t.vertex < 0 || t.vertex >= n || t.pairing < 0 || t.pairing > 2)
        throw input_error("column_of: bad transition");
    return column_index_[static_cast<std::size_t>(3 * t.vertex + t.pairing)];
}

std::uint64_t TransitionMatroid::transversal_mask(const Transversal& t) const {
    if (static_cast<int>(t.size()) != n) throw input_error("transversal_mask: arity mismatch");
    std::uint64_t mask = 0;
    for (int v = 0; v < n; ++v)
        mask |= std::uint64_t{1} << column_of({v, t[static_cast<std::size_t>(v)]});
    return mask;
}

std::vector<int> TransitionMatroid::pairing_bijection_to(const TransitionMatroid& other) const {
    if (n != other.n) throw input_error("pairing_bijection_to: vertex count mismatch");
    std::vector<int> bijection(static_cast<std::size_t>(3 * n));
    for (int col = 0; col < 3 * n; ++col)
        bijection[static_cast<std::size_t>(col)] = other.column_of(columns[static_cast<std::size_t>(col)]);
    return bijection;
}

BinaryMatroid detach_minor(const TransitionMatroid& m, int vertex, int kept_pairing) {
    const int keep_col = m.column_of({vertex, kept_pairing});
    gf2::BitMatrix rep = m.matroid.rep;

    // contract keep_col: pivot its column away unless it is a matroid loop
    // (contracting a loop is the same as deleting it)
    int pivot = -1;
    for (int i = 0; i < rep.rows(); ++i)
        if (rep.get(i, keep_col)) {
            pivot = i;
            break;
        }
    if (pivot != -1)
        for (int i = 0; i < rep.rows(); ++i)
            if (i != pivot && rep.get(i, keep_col)) rep.xor_rows(i, pivot);

    std::vector<int> keep_cols;
    for (int col = 0; col < m.matroid.size(); ++col)
        if (m.columns[static_cast<std::size_t>(col)].vertex != vertex) keep_cols.push_back(col);

    BinaryMatroid out;
    out.rep = gf2::BitMatrix(rep.rows() - (pivot == -1 ? 0 : 1), static_cast<int>(keep_cols.size()));
    for (int j = 0; j < static_cast<int>(keep_cols.size()); ++j) {
        out.ground.push_back(m.matroid.ground[static_cast<std::size_t>(keep_cols[static_cast<std::size_t>(j)])]);
        int row_out = 0;
        for (int i = 0; i < rep.rows(); ++i) {
            if (i == pivot) continue;
            if (rep.get(i, keep_cols[static_cast<std::size_t>(j)])) out.rep.set(row_out, j, true);
            ++row_out;
        }
    }
    out.rep.col_labels = out.ground;
    return out;
}

bool verify_touch_duality(const FourRegularGraph& g, const Transversal& t) {
    const CircuitPartition p = trace_partition(g, t);
    const BinaryMatroid touch = cycle_matroid(to_multigraph(touch_graph(g, p), g));

    const TransitionMatroid tm = transition_matroid(g, euler_system(g));
    std::vector<int> tau_cols;
    for (int v = 0; v < g.num_vertices(); ++v)
        tau_cols.push_back(tm.column_of({v, t[static_cast<std::size_t>(v)]}));
    const BinaryMatroid restricted_dual = dual(restrict_to(tm.matroid, tau_cols));

    // both grounds are in vertex order of F
    std::vector<int> identity(static_cast<std::size_t>(g.num_vertices()));
    for (int i = 0; i < g.num_vertices(); ++i) identity[static_cast<std::size_t>(i)] = i;
    return same_rank_function(touch, restricted_dual, identity);
}

DualPairReport check_dual_pair(const FourRegularGraph& g, const Transversal& t1,
                               const Transversal& t2) {
    const int n = g.num_vertices();
    if (static_cast<int>(t1.size()) != n || static_cast<int>(t2.size()) != n)
        throw input_error("check_dual_pair: transversal arity mismatch");
    for (int v = 0; v < n; ++v)
        if (t1[static_cast<std::size_t>(v)] == t2[static_cast<std::size_t>(v)])
            throw input_error("check_dual_pair: transversals agree at vertex " + g.vertex_name(v));

    const TransitionMatroid tm = transition_matroid(g, euler_system(g));
    const std::uint64_t mask1 = tm.transversal_mask(t1);
    const std::uint64_t mask2 = tm.transversal_mask(t2);

    DualPairReport report;
    report.r1 = rank(tm.matroid, mask1);
    report.r2 = rank(tm.matroid, mask2);
    report.is_dual_pair = (report.r1 + report.r2 == n);

    std::ostringstream detail;
    if (rank(tm.matroid, mask1 | mask2) != n) {
        report.consistency_ok = false;
        detail << "r(tau(P1) u tau(P2)) != n; ";
    }
    if (report.is_dual_pair) {
        std::vector<int> cols1, cols2;
        for (int v = 0; v < n; ++v) {
            cols1.push_back(tm.column_of({v, t1[static_cast<std::size_t>(v)]}));
            cols2.push_back(tm.column_of({v, t2[static_cast<std::size_t>(v)]}));
        }
        const BinaryMatroid m1 = restrict_to(tm.matroid, cols1);
        const BinaryMatroid m2 = restrict_to(tm.matroid, cols2);
        // restriction duality on V(F): both grounds are in vertex order
        std::vector<int> identity(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
        if (!same_rank_function(dual(m1), m2, identity)) {
            report.consistency_ok = false;
            detail << "restrictions are not dual on V(F); ";
        }
        // direct-sum rank additivity over the union (exhaustive at desk scale,
        // seeded samples beyond)
        std::vector<int> union_cols = cols1;
        union_cols.insert(union_cols.end(), cols2.begin(), cols2.end());
        const BinaryMatroid mu = restrict_to(tm.matroid, union_cols);
        bool additive = true;
        auto check_mask = [&](std::uint64_t mask) {
            const std::uint64_t low = mask & ((std::uint64_t{1} << n) - 1);
            const std::uint64_t high = mask >> n;
            if (rank(mu, mask) != rank(m1, low) + rank(m2, high)) additive = false;
        };
        if (2 * n <= 24) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)) && additive; ++mask)
                check_mask(mask);
        } else {
            std::uint64_t state = 0x9e3779b97f4a7c15ull;
            for (int trial = 0; trial < 65536 && additive; ++trial) {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                check_mask(state & ((std::uint64_t{1} << (2 * n)) - 1));
            }
        }
        if (!additive) {
            report.consistency_ok = false;
            detail << "restriction to the union is not the direct sum; ";
        }
    }
    report.detail = detail.str();
    return report;
}

std::string dump(const BinaryMatroid& m) {
    std::ostringstream out;
    out << "ground:";
    for (const auto& label : m.ground) out << " " << label;
    out << "\n";
    for (int i = 0; i < m.rep.rows(); ++i) {
        for (int j = 0; j < m.rep.cols(); ++j) out << (m.rep.get(i, j) ? '1' : '0');
        out << "\n";
    }
    return out.str();
}

} // namespace tmat
