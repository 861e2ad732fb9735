#include "tmat/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "tmat/errors.hpp"

namespace tmat {

namespace {

// -------- disjoint set union over vertex indices --------
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<int> canonical_flat(const std::vector<int>& flat) {
    const int len = static_cast<int>(flat.size());
    std::vector<int> best = flat;
    std::vector<int> cand(flat.size());
    auto consider = [&](const std::vector<int>& seq) {
        for (int shift = 0; shift < len; shift += 2) {
            for (int i = 0; i < len; ++i) cand[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>((i + shift) % len)];
            if (cand < best) best = cand;
        }
    };
    consider(flat);
    std::vector<int> rev(flat.rbegin(), flat.rend());
    consider(rev);
    return best;
}

// visits of every vertex: (arrival half-edge, following departure) per circuit
struct Visit {
    int circuit;
    int pos; // edge index along the circuit where the arrival happens
    int arrival;
    int departure;
};

std::vector<std::vector<Visit>> collect_visits(const FourRegularGraph& g, const CircuitPartition& p) {
    std::vector<std::vector<Visit>> visits(static_cast<std::size_t>(g.num_vertices()));
    for (int ci = 0; ci < p.size(); ++ci) {
        const auto& flat = p.circuits[static_cast<std::size_t>(ci)].half_edges;
        const int len = static_cast<int>(flat.size());
        for (int i = 0; 2 * i + 1 < len; ++i) {
            const int arrival = flat[static_cast<std::size_t>(2 * i + 1)];
            const int departure = flat[static_cast<std::size_t>((2 * i + 2) % len)];
            visits[static_cast<std::size_t>(arrival / 4)].push_back({ci, i, arrival, departure});
        }
    }
    return visits;
}

} // namespace

// -------------------- FourRegularGraph --------------------

FourRegularGraph FourRegularGraph::from_mate(std::vector<std::string> names, std::vector<int> mate) {
    if (mate.size() != 4 * names.size()) throw input_error("from_mate: size mismatch");
    for (int h = 0; h < static_cast<int>(mate.size()); ++h) {
        const int m = mate[static_cast<std::size_t>(h)];
        if (m < 0 || m >= static_cast<int>(mate.size()) || m == h ||
            mate[static_cast<std::size_t>(m)] != h)
            throw input_error("from_mate: not a fixed-point-free involution");
    }
    FourRegularGraph g;
    g.names_ = std::move(names);
    g.mate_ = std::move(mate);
    return g;
}

std::vector<std::string> validate(const GraphSpec& spec) {
    std::vector<std::string> issues;
    const int n = static_cast<int>(spec.vertices.size());
    std::vector<int> uses(static_cast<std::size_t>(4 * n), 0);
    auto slot_name = [&](GraphSpec::Endpoint e) {
        return spec.vertices[static_cast<std::size_t>(e.vertex)] + "." + std::to_string(e.slot);
    };
    int edge_index = 0;
    for (const auto& [a, b] : spec.edges) {
        for (const auto& e : {a, b}) {
            if (e.vertex < 0 || e.vertex >= n || e.slot < 0 || e.slot > 3) {
                issues.push_back("edge " + std::to_string(edge_index) + ": endpoint out of range");
                continue;
            }
        }
        if (a.vertex == b.vertex && a.slot == b.slot) {
            issues.push_back("edge " + std::to_string(edge_index) + ": self-paired endpoint " + slot_name(a));
        }
        for (const auto& e : {a, b}) {
            if (e.vertex < 0 || e.vertex >= n || e.slot < 0 || e.slot > 3) continue;
            int& u = uses[static_cast<std::size_t>(4 * e.vertex + e.slot)];
            ++u;
            if (u == 2) issues.push_back("slot " + slot_name(e) + " used more than once");
        }
        ++edge_index;
    }
    for (int h = 0; h < 4 * n; ++h)
        if (uses[static_cast<std::size_t>(h)] == 0)
            issues.push_back("unused slot " + spec.vertices[static_cast<std::size_t>(h / 4)] + "." +
                             std::to_string(h % 4));
    return issues;
}

FourRegularGraph FourRegularGraph::build(const GraphSpec& spec) {
    const auto issues = validate(spec);
    if (!issues.empty()) throw input_error("invalid 4-regular graph: " + issues.front());
    std::vector<int> mate(static_cast<std::size_t>(4 * spec.vertices.size()), -1);
    for (const auto& [a, b] : spec.edges) {
        const int ha = 4 * a.vertex + a.slot;
        const int hb = 4 * b.vertex + b.slot;
        mate[static_cast<std::size_t>(ha)] = hb;
        mate[static_cast<std::size_t>(hb)] = ha;
    }
    return from_mate(spec.vertices, std::move(mate));
}

int FourRegularGraph::vertex_index(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (names_[static_cast<std::size_t>(v)] == name) return v;
    throw input_error("unknown vertex: " + name);
}

std::vector<std::pair<int, int>> FourRegularGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(num_edges()));
    for (int h = 0; h < num_half_edges(); ++h)
        if (h < mate(h)) out.emplace_back(h, mate(h));
    return out;
}

std::vector<int> FourRegularGraph::component_of_vertex() const {
    Dsu dsu(num_vertices());
    for (int h = 0; h < num_half_edges(); ++h) dsu.unite(h / 4, mate(h) / 4);
    std::vector<int> comp(static_cast<std::size_t>(num_vertices()), -1);
    int next = 0;
    for (int v = 0; v < num_vertices(); ++v) {
        const int root = dsu.find(v);
        if (comp[static_cast<std::size_t>(root)] == -1) comp[static_cast<std::size_t>(root)] = next++;
        comp[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(root)];
    }
    return comp;
}

int FourRegularGraph::num_components() const {
    const auto comp = component_of_vertex();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

std::string FourRegularGraph::half_edge_name(int h) const {
    return vertex_name(h / 4) + "." + std::to_string(h % 4);
}

// -------------------- text format --------------------

GraphSpec parse_frg(std::istream& in) {
    GraphSpec spec;
    std::string line;
    int lineno = 0;
    auto endpoint = [&](const std::string& token) -> GraphSpec::Endpoint {
        const auto dot = token.rfind('.');
        if (dot == std::string::npos || dot + 2 != token.size())
            throw input_error("line " + std::to_string(lineno) + ": bad endpoint '" + token + "'");
        const std::string name = token.substr(0, dot);
        const char sc = token[dot + 1];
        if (sc < '0' || sc > '3')
            throw input_error("line " + std::to_string(lineno) + ": slot out of range in '" + token + "'");
        for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v)
            if (spec.vertices[static_cast<std::size_t>(v)] == name) return {v, sc - '0'};
        throw input_error("line " + std::to_string(lineno) + ": unknown vertex '" + name + "'");
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        if (kind == "v") {
            std::string name;
            if (!(ls >> name)) throw input_error("line " + std::to_string(lineno) + ": missing vertex name");
            if (std::find(spec.vertices.begin(), spec.vertices.end(), name) != spec.vertices.end())
                throw input_error("line " + std::to_string(lineno) + ": duplicate vertex '" + name + "'");
            spec.vertices.push_back(name);
        } else if (kind == "e") {
            std::string a, b;
            if (!(ls >> a >> b)) throw input_error("line " + std::to_string(lineno) + ": edge needs two endpoints");
            spec.edges.emplace_back(endpoint(a), endpoint(b));
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown directive '" + kind + "'");
        }
    }
    return spec;
}

GraphSpec parse_frg(const std::string& text) {
    std::istringstream in(text);
    return parse_frg(in);
}

std::string to_frg(const FourRegularGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.num_vertices(); ++v) out << "v " << g.vertex_name(v) << "\n";
    for (const auto& [h, m] : g.edges())
        out << "e " << g.half_edge_name(h) << " " << g.half_edge_name(m) << "\n";
    return out.str();
}

// -------------------- tracing --------------------

CircuitPartition trace_partition(const FourRegularGraph& g, const Transversal& t) {
    if (static_cast<int>(t.size()) != g.num_vertices())
        throw input_error("trace_partition: transversal arity mismatch");
    for (auto p : t)
        if (p > 2) throw input_error("trace_partition: pairing index out of range");

    CircuitPartition result;
    result.transversal = t;
    std::vector<char> used(static_cast<std::size_t>(g.num_half_edges()), 0);
    for (int start = 0; start < g.num_half_edges(); ++start) {
        if (used[static_cast<std::size_t>(start)]) continue;
        std::vector<int> flat;
        int d = start;
        while (true) {
            const int a = g.mate(d);
            flat.push_back(d);
            flat.push_back(a);
            used[static_cast<std::size_t>(d)] = used[static_cast<std::size_t>(a)] = 1;
            const int v = a / 4;
            const int next = 4 * v + pairing_partner(t[static_cast<std::size_t>(v)], a % 4);
            if (next == start) break;
            d = next;
        }
        result.circuits.push_back({canonical_flat(flat)});
    }
    std::sort(result.circuits.begin(), result.circuits.end(),
              [](const Circuit& a, const Circuit& b) { return a.half_edges < b.half_edges; });
    return result;
}

int count_circuits(const FourRegularGraph& g, const Transversal& t) {
    std::vector<char> used(static_cast<std::size_t>(g.num_half_edges()), 0);
    int circuits = 0;
    for (int start = 0; start < g.num_half_edges(); ++start) {
        if (used[static_cast<std::size_t>(start)]) continue;
        ++circuits;
        int d = start;
        while (true) {
            const int a = g.mate(d);
            used[static_cast<std::size_t>(d)] = used[static_cast<std::size_t>(a)] = 1;
            const int v = a / 4;
            const int next = 4 * v + pairing_partner(t[static_cast<std::size_t>(v)], a % 4);
            if (next == start) break;
            d = next;
        }
    }
    return circuits;
}

EulerSystem euler_system(const FourRegularGraph& g) {
    const int n = g.num_vertices();
    std::vector<char> used(static_cast<std::size_t>(g.num_half_edges()), 0);
    auto lowest_unused_at = [&](int v) -> int {
        for (int s = 0; s < 4; ++s)
            if (!used[static_cast<std::size_t>(4 * v + s)]) return 4 * v + s;
        return -1;
    };
    // closed walk from v, always leaving by the lowest unused slot
    auto walk = [&](int v) {
        std::vector<int> flat;
        int d = lowest_unused_at(v);
        while (d != -1) {
            const int a = g.mate(d);
            flat.push_back(d);
            flat.push_back(a);
            used[static_cast<std::size_t>(d)] = used[static_cast<std::size_t>(a)] = 1;
            d = lowest_unused_at(a / 4);
        }
        return flat;
    };

    Transversal t(static_cast<std::size_t>(n), 0);
    std::vector<char> seen_vertex(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> tours;
    for (int v0 = 0; v0 < n; ++v0) {
        if (seen_vertex[static_cast<std::size_t>(v0)]) continue;
        std::vector<int> tour = walk(v0);
        // splice subtours at the first vertex on the tour with unused slots
        bool spliced = true;
        while (spliced) {
            spliced = false;
            for (std::size_t i = 1; i < tour.size(); i += 2) {
                const int w = tour[i] / 4;
                if (lowest_unused_at(w) != -1) {
                    std::vector<int> sub = walk(w);
                    tour.insert(tour.begin() + static_cast<std::ptrdiff_t>(i) + 1, sub.begin(), sub.end());
                    spliced = true;
                    break;
                }
            }
        }
        for (int h : tour) seen_vertex[static_cast<std::size_t>(h / 4)] = 1;
        tours.push_back(std::move(tour));
    }
    // derive the transversal from the visits, then canonicalize by re-tracing
    for (const auto& flat : tours) {
        const int len = static_cast<int>(flat.size());
        for (int i = 0; 2 * i + 1 < len; ++i) {
            const int a = flat[static_cast<std::size_t>(2 * i + 1)];
            const int d = flat[static_cast<std::size_t>((2 * i + 2) % len)];
            t[static_cast<std::size_t>(a / 4)] =
                static_cast<std::uint8_t>(pairing_joining(a % 4, d % 4));
        }
    }
    EulerSystem es{trace_partition(g, t)};
    assert(es.size() == g.num_components());
    return es;
}

std::vector<std::array<TransitionLabel, 3>> transition_labels(const FourRegularGraph& g,
                                                              const EulerSystem& c) {
    const auto visits = collect_visits(g, c.partition);
    std::vector<std::array<TransitionLabel, 3>> labels(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& vv = visits[static_cast<std::size_t>(v)];
        if (vv.size() != 2) throw input_error("transition_labels: vertex not visited twice");
        const int phi = pairing_joining(vv[0].arrival % 4, vv[0].departure % 4);
        const int psi = pairing_joining(vv[0].arrival % 4, vv[1].arrival % 4);
        const int chi = 3 - phi - psi;
        auto& row = labels[static_cast<std::size_t>(v)];
        row[static_cast<std::size_t>(phi)] = TransitionLabel::phi;
        row[static_cast<std::size_t>(chi)] = TransitionLabel::chi;
        row[static_cast<std::size_t>(psi)] = TransitionLabel::psi;
    }
    return labels;
}

int pairing_with_label(const std::vector<std::array<TransitionLabel, 3>>& labels, int v,
                       TransitionLabel want) {
    for (int p = 0; p < 3; ++p)
        if (labels[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)] == want) return p;
    throw input_error("pairing_with_label: label not present");
}

EulerSystem kappa_transform(const FourRegularGraph& g, const EulerSystem& c, int v) {
    if (v < 0 || v >= g.num_vertices()) throw input_error("kappa_transform: vertex out of range");
    const auto labels = transition_labels(g, c);
    Transversal t = c.partition.transversal;
    t[static_cast<std::size_t>(v)] =
        static_cast<std::uint8_t>(pairing_with_label(labels, v, TransitionLabel::psi));
    EulerSystem es{trace_partition(g, t)};
    assert(es.size() == c.size());
    return es;
}

// -------------------- interlacement --------------------

SimpleGraph interlacement(const FourRegularGraph& g, const EulerSystem& c) {
    SimpleGraph h;
    h.names = g.vertex_names();
    h.adj = gf2::BitMatrix(g.num_vertices(), g.num_vertices());
    for (const auto& circuit : c.partition.circuits) {
        std::vector<int> word;
        for (std::size_t i = 0; i < circuit.half_edges.size(); i += 2)
            word.push_back(circuit.half_edges[i] / 4);
        const int k = static_cast<int>(word.size());
        std::vector<std::pair<int, int>> where(static_cast<std::size_t>(g.num_vertices()), {-1, -1});
        for (int i = 0; i < k; ++i) {
            auto& w = where[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])];
            (w.first == -1 ? w.first : w.second) = i;
        }
        for (int i = 0; i < k; ++i) {
            const int v = word[static_cast<std::size_t>(i)];
            const auto [v1, v2] = where[static_cast<std::size_t>(v)];
            if (v1 != i) continue; // handle each vertex once
            for (int w = 0; w < g.num_vertices(); ++w) {
                if (w == v) continue;
                const auto [w1, w2] = where[static_cast<std::size_t>(w)];
                if (w1 == -1) continue;
                const bool inside1 = w1 > v1 && w1 < v2;
                const bool inside2 = w2 > v1 && w2 < v2;
                if (inside1 != inside2) {
                    h.adj.set(v, w, true);
                    h.adj.set(w, v, true);
                }
            }
        }
    }
    return h;
}

SimpleGraph local_complement(const SimpleGraph& h, int v) {
    if (v < 0 || v >= h.size()) throw input_error("local_complement: vertex out of range");
    SimpleGraph out = h;
    std::vector<int> nbrs;
    for (int x = 0; x < h.size(); ++x)
        if (h.adjacent(v, x)) nbrs.push_back(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            out.adj.flip(nbrs[i], nbrs[j]);
            out.adj.flip(nbrs[j], nbrs[i]);
        }
    return out;
}

bool is_bipartite(const SimpleGraph& h) {
    std::vector<int> color(static_cast<std::size_t>(h.size()), -1);
    for (int start = 0; start < h.size(); ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w = 0; w < h.size(); ++w) {
                if (!h.adjacent(u, w)) continue;
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// -------------------- structural moves --------------------

Detached detachment(const FourRegularGraph& g, TransitionId t) {
    const int n = g.num_vertices();
    if (t.vertex < 0 || t.vertex >= n || t.pairing < 0 || t.pairing > 2)
        throw input_error("detachment: bad transition");
    const int v = t.vertex;

    Detached out;
    out.new_vertex_index.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::string> names;
    for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        out.new_vertex_index[static_cast<std::size_t>(w)] = static_cast<int>(names.size());
        names.push_back(g.vertex_name(w));
    }
    auto remap = [&](int h) {
        return 4 * out.new_vertex_index[static_cast<std::size_t>(h / 4)] + h % 4;
    };

    std::vector<int> mate(static_cast<std::size_t>(4 * (n - 1)), -1);
    for (int h = 0; h < g.num_half_edges(); ++h) {
        const int m = g.mate(h);
        if (h / 4 == v || m / 4 == v || h > m) continue;
        mate[static_cast<std::size_t>(remap(h))] = remap(m);
        mate[static_cast<std::size_t>(remap(m))] = remap(h);
    }

    // follow chains through v's slots; each chain either joins two external
    // half-edges or closes into a vertex-free arc
    std::array<bool, 4> done{false, false, false, false};
    for (int s = 0; s < 4; ++s) {
        if (done[static_cast<std::size_t>(s)]) continue;
        const int m = g.mate(4 * v + s);
        if (m / 4 == v) continue; // internal ends handled from external starts or as closed arcs
        int cur = s;
        int x = m; // external half-edge entering the chain
        while (true) {
            done[static_cast<std::size_t>(cur)] = true;
            const int partner = pairing_partner(t.pairing, cur);
            done[static_cast<std::size_t>(partner)] = true;
            const int y = g.mate(4 * v + partner);
            if (y / 4 != v) {
                mate[static_cast<std::size_t>(remap(x))] = remap(y);
                mate[static_cast<std::size_t>(remap(y))] = remap(x);
                break;
            }
            cur = y % 4;
        }
    }
    for (int s = 0; s < 4; ++s) {
        if (done[static_cast<std::size_t>(s)]) continue;
        // closed arc: loops at v joined to themselves by the pairing
        int cur = s;
        while (!done[static_cast<std::size_t>(cur)]) {
            done[static_cast<std::size_t>(cur)] = true;
            const int partner = pairing_partner(t.pairing, cur);
            done[static_cast<std::size_t>(partner)] = true;
            cur = g.mate(4 * v + partner) % 4;
        }
        ++out.discarded_free_arcs;
    }

    out.graph = FourRegularGraph::from_mate(std::move(names), std::move(mate));
    return out;
}

FourRegularGraph connected_sum(const FourRegularGraph& g1, int e1, const FourRegularGraph& g2,
                               int e2, int matching) {
    const auto edges1 = g1.edges();
    const auto edges2 = g2.edges();
    if (e1 < 0 || e1 >= static_cast<int>(edges1.size()) || e2 < 0 ||
        e2 >= static_cast<int>(edges2.size()))
        throw input_error("connected_sum: edge index out of range");
    if (matching != 0 && matching != 1) throw input_error("connected_sum: matching must be 0 or 1");

    std::vector<std::string> names = g1.vertex_names();
    for (const auto& name : g2.vertex_names()) {
        std::string candidate = name;
        while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "'";
        names.push_back(candidate);
    }
    const int offset = g1.num_half_edges();
    std::vector<int> mate(static_cast<std::size_t>(g1.num_half_edges() + g2.num_half_edges()));
    for (int h = 0; h < g1.num_half_edges(); ++h) mate[static_cast<std::size_t>(h)] = g1.mate(h);
    for (int h = 0; h < g2.num_half_edges(); ++h)
        mate[static_cast<std::size_t>(offset + h)] = offset + g2.mate(h);

    const auto [a, a2] = edges1[static_cast<std::size_t>(e1)];
    const int b = offset + edges2[static_cast<std::size_t>(e2)].first;
    const int b2 = offset + edges2[static_cast<std::size_t>(e2)].second;
    const int pa = matching == 0 ? b : b2;
    const int pa2 = matching == 0 ? b2 : b;
    mate[static_cast<std::size_t>(a)] = pa;
    mate[static_cast<std::size_t>(pa)] = a;
    mate[static_cast<std::size_t>(a2)] = pa2;
    mate[static_cast<std::size_t>(pa2)] = a2;
    return FourRegularGraph::from_mate(std::move(names), std::move(mate));
}

FourRegularGraph separation(const FourRegularGraph& g, int e1, int e2) {
    const auto all = g.edges();
    if (e1 < 0 || e1 >= static_cast<int>(all.size()) || e2 < 0 || e2 >= static_cast<int>(all.size()))
        throw input_error("separation: edge index out of range");
    if (e1 == e2) throw input_error("separation: edges must be distinct");

    Dsu dsu(g.num_vertices());
    for (int idx = 0; idx < static_cast<int>(all.size()); ++idx) {
        if (idx == e1 || idx == e2) continue;
        dsu.unite(all[static_cast<std::size_t>(idx)].first / 4,
                  all[static_cast<std::size_t>(idx)].second / 4);
    }
    const auto [a, a2] = all[static_cast<std::size_t>(e1)];
    const auto [b, b2] = all[static_cast<std::size_t>(e2)];
    if (dsu.find(a / 4) == dsu.find(a2 / 4)) throw input_error("separation: not a 2-edge cut");
    int pb, pb2; // partners of a, a2 on their own sides
    if (dsu.find(b / 4) == dsu.find(a / 4) && dsu.find(b2 / 4) == dsu.find(a2 / 4)) {
        pb = b;
        pb2 = b2;
    } else if (dsu.find(b2 / 4) == dsu.find(a / 4) && dsu.find(b / 4) == dsu.find(a2 / 4)) {
        pb = b2;
        pb2 = b;
    } else {
        throw input_error("separation: not a 2-edge cut");
    }
    std::vector<int> mate(static_cast<std::size_t>(g.num_half_edges()));
    for (int h = 0; h < g.num_half_edges(); ++h) mate[static_cast<std::size_t>(h)] = g.mate(h);
    mate[static_cast<std::size_t>(a)] = pb;
    mate[static_cast<std::size_t>(pb)] = a;
    mate[static_cast<std::size_t>(a2)] = pb2;
    mate[static_cast<std::size_t>(pb2)] = a2;
    auto result = FourRegularGraph::from_mate(g.vertex_names(), std::move(mate));
    assert(result.num_components() == g.num_components() + 1);
    return result;
}

FourRegularGraph balanced_mutation(const FourRegularGraph& g, std::pair<int, int> pair1,
                                   std::pair<int, int> pair2, bool swap1, bool swap2) {
    const auto all = g.edges();
    const std::array<int, 4> cut{pair1.first, pair1.second, pair2.first, pair2.second};
    for (int e : cut)
        if (e < 0 || e >= static_cast<int>(all.size()))
            throw input_error("balanced_mutation: edge index out of range");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (cut[i] == cut[j]) throw input_error("balanced_mutation: edges must be distinct");

    Dsu dsu(g.num_vertices());
    for (int idx = 0; idx < static_cast<int>(all.size()); ++idx) {
        if (std::find(cut.begin(), cut.end(), idx) != cut.end()) continue;
        dsu.unite(all[static_cast<std::size_t>(idx)].first / 4,
                  all[static_cast<std::size_t>(idx)].second / 4);
    }
    // 2-color the components so every cut edge crosses; independent
    // constraint components are seeded as they surface
    std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
    bool done_coloring = false;
    while (!done_coloring) {
        bool progress = false;
        int pending = -1;
        done_coloring = true;
        for (int e : cut) {
            const auto [h, m] = all[static_cast<std::size_t>(e)];
            const int ru = dsu.find(h / 4), rv = dsu.find(m / 4);
            if (ru == rv) throw input_error("balanced_mutation: edges do not form an edge cut");
            int& cu = color[static_cast<std::size_t>(ru)];
            int& cv = color[static_cast<std::size_t>(rv)];
            if (cu == -1 && cv == -1) {
                done_coloring = false;
                if (pending == -1) pending = e;
            } else if (cu == -1) {
                cu = 1 - cv;
                progress = true;
            } else if (cv == -1) {
                cv = 1 - cu;
                progress = true;
            } else if (cu == cv) {
                throw input_error("balanced_mutation: edges do not form an edge cut");
            }
        }
        if (!done_coloring && !progress) {
            const auto [h, m] = all[static_cast<std::size_t>(pending)];
            color[static_cast<std::size_t>(dsu.find(h / 4))] = 0;
            color[static_cast<std::size_t>(dsu.find(m / 4))] = 1;
        }
    }
    auto side = [&](int h) { return color[static_cast<std::size_t>(dsu.find(h / 4))]; };

    std::vector<int> mate(static_cast<std::size_t>(g.num_half_edges()));
    for (int h = 0; h < g.num_half_edges(); ++h) mate[static_cast<std::size_t>(h)] = g.mate(h);
    auto apply = [&](std::pair<int, int> pr, bool swap) {
        if (!swap) return;
        auto [eh, fh] = pr;
        auto [x1, x2] = all[static_cast<std::size_t>(eh)];
        auto [y1, y2] = all[static_cast<std::size_t>(fh)];
        if (side(x1) != 0) std::swap(x1, x2);
        if (side(y1) != 0) std::swap(y1, y2);
        // re-cross: {x1,y2} and {y1,x2}, both still crossing the cut
        mate[static_cast<std::size_t>(x1)] = y2;
        mate[static_cast<std::size_t>(y2)] = x1;
        mate[static_cast<std::size_t>(y1)] = x2;
        mate[static_cast<std::size_t>(x2)] = y1;
    };
    apply(pair1, swap1);
    apply(pair2, swap2);
    return FourRegularGraph::from_mate(g.vertex_names(), std::move(mate));
}

// -------------------- touch graphs, orientations --------------------

TouchGraph touch_graph(const FourRegularGraph& g, const CircuitPartition& p) {
    const auto visits = collect_visits(g, p);
    TouchGraph tg;
    tg.num_vertices = p.size();
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& vv = visits[static_cast<std::size_t>(v)];
        if (vv.size() != 2) throw input_error("touch_graph: vertex not visited twice");
        tg.edges.push_back({vv[0].circuit, vv[1].circuit, v});
    }
    return tg;
}

BalancedOrientation balanced_orientation(const FourRegularGraph& g) {
    const EulerSystem es = euler_system(g);
    BalancedOrientation o(static_cast<std::size_t>(g.num_half_edges()), 0);
    for (const auto& circuit : es.partition.circuits)
        for (std::size_t i = 0; i < circuit.half_edges.size(); i += 2)
            o[static_cast<std::size_t>(circuit.half_edges[i])] = 1;
    return o;
}

bool is_balanced(const FourRegularGraph& g, const BalancedOrientation& o) {
    if (static_cast<int>(o.size()) != g.num_half_edges()) return false;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (o[static_cast<std::size_t>(h)] == o[static_cast<std::size_t>(g.mate(h))]) return false;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int initial = 0;
        for (int s = 0; s < 4; ++s) initial += o[static_cast<std::size_t>(4 * v + s)];
        if (initial != 2) return false;
    }
    return true;
}

// -------------------- planarity --------------------

namespace {

using Rows = std::vector<std::uint64_t>;

Rows to_rows(const SimpleGraph& h) {
    Rows rows(static_cast<std::size_t>(h.size()), 0);
    for (int i = 0; i < h.size(); ++i)
        for (int j = 0; j < h.size(); ++j)
            if (h.adjacent(i, j)) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    return rows;
}

bool rows_bipartite(const Rows& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (std::uint64_t bits = g[static_cast<std::size_t>(u)]; bits; bits &= bits - 1) {
                const int w = std::countr_zero(bits);
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Rows rows_local_complement(Rows g, int v) {
    const std::uint64_t nbrs = g[static_cast<std::size_t>(v)];
    for (std::uint64_t bits = nbrs; bits; bits &= bits - 1) {
        const int x = std::countr_zero(bits);
        g[static_cast<std::size_t>(x)] ^= nbrs & ~(std::uint64_t{1} << x);
    }
    return g;
}

// minimum upper-triangular adjacency bit-string over all vertex permutations
// (branch and bound); valid canonical form for n <= 8
std::uint64_t min_perm_code(const Rows& g) {
    const int n = static_cast<int>(g.size());
    const int total_bits = n * (n - 1) / 2;
    std::uint64_t best = total_bits ? (~std::uint64_t{0} >> (64 - total_bits)) : 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto search = [&](auto&& self, int level, std::uint64_t acc, int bits_so_far) -> void {
        if (level == n) {
            if (acc < best) best = acc;
            return;
        }
        for (int u = 0; u < n; ++u) {
            if (used[static_cast<std::size_t>(u)]) continue;
            std::uint64_t row = 0;
            for (int j = 0; j < level; ++j)
                row = (row << 1) |
                      ((g[static_cast<std::size_t>(u)] >> perm[static_cast<std::size_t>(j)]) & 1u);
            const std::uint64_t acc2 = (acc << level) | row;
            const int bits2 = bits_so_far + level;
            if (bits2 > 0 && acc2 > (best >> (total_bits - bits2))) continue;
            perm[static_cast<std::size_t>(level)] = u;
            used[static_cast<std::size_t>(u)] = 1;
            self(self, level + 1, acc2, bits2);
            used[static_cast<std::size_t>(u)] = 0;
        }
    };
    search(search, 0, 0, 0);
    return best;
}

std::string canon_key(const Rows& g) {
    const int n = static_cast<int>(g.size());
    if (n <= 8) {
        const std::uint64_t code = min_perm_code(g);
        return std::string(reinterpret_cast<const char*>(&code), sizeof(code));
    }
    // larger graphs: exact labeled key (never merges non-isomorphic states)
    std::string key;
    key.reserve(g.size() * sizeof(std::uint64_t));
    for (std::uint64_t row : g) key.append(reinterpret_cast<const char*>(&row), sizeof(row));
    return key;
}

} // namespace

PlanarityAnswer is_planar(const FourRegularGraph& g, std::size_t cap) {
    const SimpleGraph start = interlacement(g, euler_system(g));
    const int n = start.size();
    Rows first = to_rows(start);
    if (rows_bipartite(first)) return {Planarity::yes, 1};

    std::unordered_set<std::string> visited;
    std::deque<Rows> queue;
    visited.insert(canon_key(first));
    queue.push_back(std::move(first));
    while (!queue.empty()) {
        const Rows cur = std::move(queue.front());
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            if (cur[static_cast<std::size_t>(v)] == 0) continue; // lc at isolated vertex is a no-op
            Rows next = rows_local_complement(cur, v);
            if (rows_bipartite(next)) return {Planarity::yes, visited.size()};
            auto key = canon_key(next);
            if (visited.contains(key)) continue;
            if (visited.size() >= cap) return {Planarity::budget_exceeded, visited.size()};
            visited.insert(std::move(key));
            queue.push_back(std::move(next));
        }
    }
    return {Planarity::no, visited.size()};
}

bool is_planar_dual_pair_scan(const FourRegularGraph& g) {
    const int n = g.num_vertices();
    const int c = g.num_components();
    const std::uint64_t count = transversal_count(n);
    Transversal t2(static_cast<std::size_t>(n), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Transversal t1 = transversal_from_index(i, n);
        const int p1 = count_circuits(g, t1);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            for (int v = 0; v < n; ++v) {
                // pick one of the two pairings different from t1[v] by the mask bit
                int choice = 0;
                for (int p = 0; p < 3; ++p) {
                    if (p == t1[static_cast<std::size_t>(v)]) continue;
                    if (choice++ == static_cast<int>((mask >> v) & 1)) {
                        t2[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(p);
                        break;
                    }
                }
            }
            const int p2 = count_circuits(g, t2);
            if (p1 + p2 == n + 2 * c) return true;
        }
    }
    return false;
}

// -------------------- transversal enumeration --------------------

std::uint64_t transversal_count(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c *= 3;
    return c;
}

Transversal transversal_from_index(std::uint64_t index, int n) {
    Transversal t(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        t[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(index % 3);
        index /= 3;
    }
    return t;
}

std::uint64_t transversal_to_index(const Transversal& t) {
    std::uint64_t index = 0;
    for (int v = static_cast<int>(t.size()) - 1; v >= 0; --v)
        index = index * 3 + t[static_cast<std::size_t>(v)];
    return index;
}

Transversal parse_transversal(const std::string& digits, int n) {
    if (static_cast<int>(digits.size()) != n)
        throw input_error("transversal must have one digit per vertex (" + std::to_string(n) + ")");
    Transversal t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const char c = digits[static_cast<std::size_t>(i)];
        if (c < '0' || c > '2') throw input_error("transversal digits must be 0, 1 or 2");
        t[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c - '0');
    }
    return t;
}

std::string transversal_digits(const Transversal& t) {
    std::string s;
    for (auto p : t) s += static_cast<char>('0' + p);
    return s;
}

} // namespace tmat
