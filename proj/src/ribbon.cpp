#include "tmat/ribbon.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "tmat/errors.hpp"
#include "tmat/matroid.hpp"

namespace tmat {

int RibbonGraph::vertex_of_half_edge(int h) const {
    for (int v = 0; v < num_vertices(); ++v)
        for (int x : rotation[static_cast<std::size_t>(v)])
            if (x == h) return v;
    throw input_error("half-edge not in any rotation");
}

int RibbonGraph::edge_index(const std::string& name) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edges[static_cast<std::size_t>(e)].name == name) return e;
    throw input_error("unknown edge: " + name);
}

RibbonGraph parse_ribbon(const std::string& text) {
    struct RawEdge {
        std::string name, ha, hb;
        int sign;
    };
    std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
    std::vector<RawEdge> raw_edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        if (kind == "v") {
            std::string name;
            if (!(ls >> name)) throw input_error("line " + std::to_string(lineno) + ": missing vertex name");
            if (name.back() == ':') name.pop_back();
            if (name.empty()) throw input_error("line " + std::to_string(lineno) + ": missing vertex name");
            std::vector<std::string> hs;
            std::string token;
            while (ls >> token) hs.push_back(token);
            rotations.emplace_back(name, std::move(hs));
        } else if (kind == "e") {
            RawEdge e;
            std::string sign;
            if (!(ls >> e.name >> e.ha >> e.hb >> sign))
                throw input_error("line " + std::to_string(lineno) + ": edge needs name, two half-edges, sign");
            if (sign == "1" || sign == "+1")
                e.sign = 1;
            else if (sign == "-1")
                e.sign = -1;
            else
                throw input_error("line " + std::to_string(lineno) + ": sign must be +1 or -1");
            raw_edges.push_back(std::move(e));
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown directive '" + kind + "'");
        }
    }
    RibbonGraph g;
    std::map<std::string, int> half_edge_id;
    for (int e = 0; e < static_cast<int>(raw_edges.size()); ++e) {
        const auto& raw = raw_edges[static_cast<std::size_t>(e)];
        if (raw.ha == raw.hb) throw input_error("edge '" + raw.name + "' repeats a half-edge");
        for (const auto& h : {raw.ha, raw.hb})
            if (!half_edge_id.emplace(h, 2 * e + (h == raw.hb)).second)
                throw input_error("half-edge '" + h + "' used by two edges");
        g.edges.push_back({2 * e, 2 * e + 1, raw.sign, raw.name});
    }
    std::vector<char> placed(half_edge_id.size(), 0);
    for (const auto& [vname, hs] : rotations) {
        g.vertex_names.push_back(vname);
        std::vector<int> rot;
        for (const auto& h : hs) {
            auto it = half_edge_id.find(h);
            if (it == half_edge_id.end()) throw input_error("rotation uses unknown half-edge '" + h + "'");
            if (placed[static_cast<std::size_t>(it->second)])
                throw input_error("half-edge '" + h + "' appears in two rotations");
            placed[static_cast<std::size_t>(it->second)] = 1;
            rot.push_back(it->second);
        }
        g.rotation.push_back(std::move(rot));
    }
    for (const auto& [h, id] : half_edge_id)
        if (!placed[static_cast<std::size_t>(id)])
            throw input_error("half-edge '" + h + "' missing from every rotation");
    return g;
}

std::string to_ribbon_text(const RibbonGraph& g) {
    // half-edge display names: <edge>a / <edge>b
    auto hname = [&](int h) {
        const auto& e = g.edges[static_cast<std::size_t>(h / 2)];
        return e.name + (h % 2 ? "b" : "a");
    };
    std::ostringstream out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "v " << g.vertex_names[static_cast<std::size_t>(v)] << ":";
        for (int h : g.rotation[static_cast<std::size_t>(v)]) out << " " << hname(h);
        out << "\n";
    }
    for (const auto& e : g.edges)
        out << "e " << e.name << " " << hname(e.h1) << " " << hname(e.h2) << " "
            << (e.sign > 0 ? "1" : "-1") << "\n";
    return out.str();
}

Medial medial(const RibbonGraph& g) {
    const int m = g.num_edges();
    // medial slot of a band corner: 4*edge + 2*end + corner
    auto slot_of = [&](int h, int corner) { return 4 * (h / 2) + 2 * (h % 2) + corner; };
    std::vector<int> mate(static_cast<std::size_t>(4 * m), -1);
    int isolated = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& rot = g.rotation[static_cast<std::size_t>(v)];
        if (rot.empty()) {
            ++isolated;
            continue;
        }
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) {
            // connect the trailing corner of this end to the leading corner
            // of the next end around the disk
            const int a = slot_of(rot[static_cast<std::size_t>(i)], 1);
            const int b = slot_of(rot[static_cast<std::size_t>((i + 1) % k)], 0);
            mate[static_cast<std::size_t>(a)] = b;
            mate[static_cast<std::size_t>(b)] = a;
        }
    }
    std::vector<std::string> names;
    for (const auto& e : g.edges) names.push_back(e.name);
    Medial med;
    med.graph = FourRegularGraph::from_mate(std::move(names), std::move(mate));
    med.delta.assign(static_cast<std::size_t>(m), 0);
    med.eps.resize(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e)
        med.eps[static_cast<std::size_t>(e)] =
            static_cast<std::uint8_t>(g.edges[static_cast<std::size_t>(e)].sign > 0 ? 2 : 1);
    med.isolated_disks = isolated;
    return med;
}

RibbonGraph from_partitions(const FourRegularGraph& f, const Transversal& delta,
                            const Transversal& eps) {
    const int n = f.num_vertices();
    if (static_cast<int>(delta.size()) != n || static_cast<int>(eps.size()) != n)
        throw input_error("from_partitions: transversal arity mismatch");
    for (int v = 0; v < n; ++v)
        if (delta[static_cast<std::size_t>(v)] == eps[static_cast<std::size_t>(v)])
            throw input_error("from_partitions: coinciding transitions at vertex " + f.vertex_name(v));

    const CircuitPartition disks = trace_partition(f, delta);
    RibbonGraph g;
    for (int j = 0; j < disks.size(); ++j) g.vertex_names.push_back("d" + std::to_string(j));
    g.rotation.resize(static_cast<std::size_t>(disks.size()));

    // visit bookkeeping: first visit of a medial vertex = band end 0
    struct Visit {
        int arrival, departure;
    };
    std::vector<std::vector<Visit>> visits(static_cast<std::size_t>(n));
    for (int j = 0; j < disks.size(); ++j) {
        const auto& flat = disks.circuits[static_cast<std::size_t>(j)].half_edges;
        const int len = static_cast<int>(flat.size());
        for (int i = 0; 2 * i + 1 < len; ++i) {
            const int arrival = flat[static_cast<std::size_t>(2 * i + 1)];
            const int departure = flat[static_cast<std::size_t>((2 * i + 2) % len)];
            const int v = arrival / 4;
            auto& vv = visits[static_cast<std::size_t>(v)];
            vv.push_back({arrival, departure});
            g.rotation[static_cast<std::size_t>(j)].push_back(2 * v + (static_cast<int>(vv.size()) - 1));
        }
    }
    for (int v = 0; v < n; ++v) {
        const auto& vv = visits[static_cast<std::size_t>(v)];
        if (vv.size() != 2) throw consistency_error("from_partitions: vertex not visited twice");
        const int e = eps[static_cast<std::size_t>(v)];
        int sign;
        if (pairing_joining(vv[0].arrival % 4, vv[1].departure % 4) == e)
            sign = 1; // eps joins a leading corner to the other end's trailing corner
        else if (pairing_joining(vv[0].arrival % 4, vv[1].arrival % 4) == e)
            sign = -1; // eps joins the two leading corners
        else
            throw consistency_error("from_partitions: eps equals delta at vertex " + f.vertex_name(v));
        g.edges.push_back({2 * v, 2 * v + 1, sign, f.vertex_name(v)});
    }
    return g;
}

namespace {

struct SubMedial {
    FourRegularGraph graph;
    Transversal delta, eps;
    int bare_disks = 0; // disks with no surviving band
};

// detach medial vertices of edges outside the mask along their delta
// transitions, tracking freed arcs
SubMedial restricted_medial(const RibbonGraph& g, std::uint32_t edge_mask) {
    Medial med = medial(g);
    SubMedial sub{std::move(med.graph), std::move(med.delta), std::move(med.eps),
                  med.isolated_disks};
    std::vector<int> vertex_of_edge(static_cast<std::size_t>(g.num_edges()));
    std::iota(vertex_of_edge.begin(), vertex_of_edge.end(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        if ((edge_mask >> e) & 1) continue;
        const int v = vertex_of_edge[static_cast<std::size_t>(e)];
        Detached det = detachment(sub.graph, {v, sub.delta[static_cast<std::size_t>(v)]});
        sub.bare_disks += det.discarded_free_arcs;
        Transversal ndelta, neps;
        ndelta.resize(static_cast<std::size_t>(det.graph.num_vertices()));
        neps.resize(static_cast<std::size_t>(det.graph.num_vertices()));
        for (int old = 0; old < sub.graph.num_vertices(); ++old) {
            const int ni = det.new_vertex_index[static_cast<std::size_t>(old)];
            if (ni == -1) continue;
            ndelta[static_cast<std::size_t>(ni)] = sub.delta[static_cast<std::size_t>(old)];
            neps[static_cast<std::size_t>(ni)] = sub.eps[static_cast<std::size_t>(old)];
        }
        for (int e2 = 0; e2 < g.num_edges(); ++e2) {
            int& w = vertex_of_edge[static_cast<std::size_t>(e2)];
            if (w != -1) w = det.new_vertex_index[static_cast<std::size_t>(w)];
        }
        sub.graph = std::move(det.graph);
        sub.delta = std::move(ndelta);
        sub.eps = std::move(neps);
    }
    return sub;
}

} // namespace

int boundary_components(const RibbonGraph& g, std::uint32_t edge_mask) {
    if (g.num_edges() > 32) throw budget_error("boundary_components: more than 32 edges");
    if (g.num_edges() < 32 && (edge_mask >> g.num_edges()) != 0)
        throw input_error("boundary_components: edge mask out of range");
    const SubMedial sub = restricted_medial(g, edge_mask);
    const int traced = sub.graph.num_vertices() == 0 ? 0 : count_circuits(sub.graph, sub.eps);
    return traced + sub.bare_disks;
}

int boundary_components(const RibbonGraph& g) {
    return boundary_components(
        g, g.num_edges() >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.num_edges()) - 1);
}

bool orientable(const RibbonGraph& g) {
    // 2-color the medial half-edges: mates differ, and both delta and eps
    // pair an arrival with a departure
    const Medial med = medial(g);
    const int hn = med.graph.num_half_edges();
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(hn));
    auto link = [&](int a, int b) {
        adjacent[static_cast<std::size_t>(a)].push_back(b);
        adjacent[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int h = 0; h < hn; ++h)
        if (h < med.graph.mate(h)) link(h, med.graph.mate(h));
    for (int v = 0; v < med.graph.num_vertices(); ++v)
        for (const int p : {static_cast<int>(med.delta[static_cast<std::size_t>(v)]),
                            static_cast<int>(med.eps[static_cast<std::size_t>(v)])})
            for (int s = 0; s < 4; ++s) {
                const int partner = pairing_partner(p, s);
                if (s < partner) link(4 * v + s, 4 * v + partner);
            }
    std::vector<int> color(static_cast<std::size_t>(hn), -1);
    for (int start = 0; start < hn; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : adjacent[static_cast<std::size_t>(u)]) {
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

bool orientable_by_counts(const RibbonGraph& g) {
    const int m = g.num_edges();
    if (m > 16) throw budget_error("orientable_by_counts: more than 16 edges");
    const Medial med = medial(g);
    if (m == 0) return true;
    std::vector<int> sizes(std::size_t{1} << m);
    Transversal t(static_cast<std::size_t>(m));
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        for (int v = 0; v < m; ++v)
            t[static_cast<std::size_t>(v)] = ((mask >> v) & 1)
                                                 ? med.delta[static_cast<std::size_t>(v)]
                                                 : med.eps[static_cast<std::size_t>(v)];
        sizes[mask] = count_circuits(med.graph, t);
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
        for (int a = 0; a < m; ++a)
            if ((mask >> a) & 1)
                if (sizes[mask] == sizes[mask ^ (std::uint32_t{1} << a)]) return false;
    return true;
}

SurfaceInfo euler_genus(const RibbonGraph& g) {
    const Medial med = medial(g);
    SurfaceInfo info;
    info.bands = g.num_edges();

    // component of each ribbon vertex
    std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()));
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
        return x;
    };
    for (const auto& e : g.edges) {
        const int u = find(g.vertex_of_half_edge(e.h1));
        const int v = find(g.vertex_of_half_edge(e.h2));
        if (u != v) comp[static_cast<std::size_t>(u)] = v;
    }
    std::map<int, int> comp_id;
    for (int v = 0; v < g.num_vertices(); ++v) comp_id.emplace(find(v), static_cast<int>(comp_id.size()));
    info.components = static_cast<int>(comp_id.size());

    std::vector<int> disks_per(static_cast<std::size_t>(info.components), 0);
    std::vector<int> bands_per(static_cast<std::size_t>(info.components), 0);
    std::vector<int> boundary_per(static_cast<std::size_t>(info.components), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.rotation[static_cast<std::size_t>(v)].empty())
            ++disks_per[static_cast<std::size_t>(comp_id[find(v)])];
    for (const auto& e : g.edges)
        ++bands_per[static_cast<std::size_t>(comp_id[find(g.vertex_of_half_edge(e.h1))])];
    const CircuitPartition eps_partition = trace_partition(med.graph, med.eps);
    for (const auto& circuit : eps_partition.circuits) {
        const int medial_vertex = circuit.half_edges.front() / 4; // = edge index of g
        const auto& e = g.edges[static_cast<std::size_t>(medial_vertex)];
        ++boundary_per[static_cast<std::size_t>(comp_id[find(g.vertex_of_half_edge(e.h1))])];
    }
    // isolated vertices: one disk, one boundary circle each
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.rotation[static_cast<std::size_t>(v)].empty()) {
            ++disks_per[static_cast<std::size_t>(comp_id[find(v)])];
            ++boundary_per[static_cast<std::size_t>(comp_id[find(v)])];
        }

    // per-component orientability: restrict the propagation to the component
    std::vector<bool> comp_orientable(static_cast<std::size_t>(info.components), true);
    {
        const int hn = med.graph.num_half_edges();
        std::vector<int> comp_of_half(static_cast<std::size_t>(hn));
        for (int h = 0; h < hn; ++h) {
            const auto& e = g.edges[static_cast<std::size_t>(h / 4)];
            comp_of_half[static_cast<std::size_t>(h)] = comp_id[find(g.vertex_of_half_edge(e.h1))];
        }
        std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(hn));
        auto link = [&](int a, int b) {
            adjacent[static_cast<std::size_t>(a)].push_back(b);
            adjacent[static_cast<std::size_t>(b)].push_back(a);
        };
        for (int h = 0; h < hn; ++h)
            if (h < med.graph.mate(h)) link(h, med.graph.mate(h));
        for (int v = 0; v < med.graph.num_vertices(); ++v)
            for (const int p : {static_cast<int>(med.delta[static_cast<std::size_t>(v)]),
                                static_cast<int>(med.eps[static_cast<std::size_t>(v)])})
                for (int s = 0; s < 4; ++s) {
                    const int partner = pairing_partner(p, s);
                    if (s < partner) link(4 * v + s, 4 * v + partner);
                }
        std::vector<int> color(static_cast<std::size_t>(hn), -1);
        for (int start = 0; start < hn; ++start) {
            if (color[static_cast<std::size_t>(start)] != -1) continue;
            color[static_cast<std::size_t>(start)] = 0;
            std::deque<int> queue{start};
            while (!queue.empty()) {
                const int u = queue.front();
                queue.pop_front();
                for (int w : adjacent[static_cast<std::size_t>(u)]) {
                    if (color[static_cast<std::size_t>(w)] == -1) {
                        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                        queue.push_back(w);
                    } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                        comp_orientable[static_cast<std::size_t>(
                            comp_of_half[static_cast<std::size_t>(w)])] = false;
                    }
                }
            }
        }
    }

    for (int c = 0; c < info.components; ++c) {
        const int chi = disks_per[static_cast<std::size_t>(c)] - bands_per[static_cast<std::size_t>(c)] +
                        boundary_per[static_cast<std::size_t>(c)];
        const bool ori = comp_orientable[static_cast<std::size_t>(c)];
        info.per_component.push_back({chi, ori, ori ? (2 - chi) / 2 : 2 - chi});
        info.euler_characteristic += chi;
        info.disks += disks_per[static_cast<std::size_t>(c)];
        info.boundary_curves += boundary_per[static_cast<std::size_t>(c)];
        info.orientable = info.orientable && ori;
    }
    return info;
}

RibbonGraph twisted_dual(const RibbonGraph& g, const std::vector<std::array<int, 3>>& perm) {
    if (static_cast<int>(perm.size()) != g.num_edges())
        throw input_error("twisted_dual: need one permutation per edge");
    const Medial med = medial(g);
    if (med.isolated_disks > 0)
        throw input_error("twisted_dual: isolated vertices have no medial representation");
    Transversal ndelta(med.delta.size()), neps(med.eps.size());
    for (int v = 0; v < med.graph.num_vertices(); ++v) {
        const int d = med.delta[static_cast<std::size_t>(v)];
        const int e = med.eps[static_cast<std::size_t>(v)];
        const std::array<int, 3> designated{d, e, 3 - d - e}; // pairing indices sum to 3
        const auto& p = perm[static_cast<std::size_t>(v)];
        std::array<bool, 3> seen{false, false, false};
        for (int i : p) {
            if (i < 0 || i > 2 || seen[static_cast<std::size_t>(i)])
                throw input_error("twisted_dual: bad permutation");
            seen[static_cast<std::size_t>(i)] = true;
        }
        ndelta[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(designated[static_cast<std::size_t>(p[0])]);
        neps[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(designated[static_cast<std::size_t>(p[1])]);
    }
    return from_partitions(med.graph, ndelta, neps);
}

RibbonGraph geometric_dual(const RibbonGraph& g) {
    std::vector<std::array<int, 3>> perm(static_cast<std::size_t>(g.num_edges()), {1, 0, 2});
    return twisted_dual(g, perm);
}

namespace {

// canonical byte string of (medial graph, delta, eps): per medial vertex the
// slots are renamed so delta becomes t0 and eps becomes t2; the remaining
// freedom (4 renamings per vertex) is searched for the minimal edge list
std::string canonical_medial_key(const Medial& med) {
    const int n = med.graph.num_vertices();
    if (n > 10) throw budget_error("equivalent_ribbon: more than 10 edges");
    // order medial vertices by name
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return med.graph.vertex_name(a) < med.graph.vertex_name(b);
    });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    // the four slot renamings per vertex sending (delta,eps) to (t0,t2):
    // anchor slot a -> 0, delta-partner(a) -> 1, eps-partner(a) -> 3, rest -> 2
    std::vector<std::array<std::array<int, 4>, 4>> renamings(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int d = med.delta[static_cast<std::size_t>(v)];
        const int e = med.eps[static_cast<std::size_t>(v)];
        for (int anchor = 0; anchor < 4; ++anchor) {
            auto& sigma = renamings[static_cast<std::size_t>(v)][static_cast<std::size_t>(anchor)];
            const int dp = pairing_partner(d, anchor);
            const int ep = pairing_partner(e, anchor);
            sigma[static_cast<std::size_t>(anchor)] = 0;
            sigma[static_cast<std::size_t>(dp)] = 1;
            sigma[static_cast<std::size_t>(ep)] = 3;
            sigma[static_cast<std::size_t>(6 - anchor - dp - ep)] = 2;
        }
    }

    std::string best;
    std::vector<int> choice(static_cast<std::size_t>(n), 0);
    auto encode = [&]() {
        std::vector<std::pair<int, int>> edge_list;
        for (const auto& [h, m] : med.graph.edges()) {
            auto rename = [&](int x) {
                const int v = x / 4;
                return 4 * pos[static_cast<std::size_t>(v)] +
                       renamings[static_cast<std::size_t>(v)]
                                [static_cast<std::size_t>(choice[static_cast<std::size_t>(v)])]
                                [static_cast<std::size_t>(x % 4)];
            };
            const int a = rename(h), b = rename(m);
            edge_list.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edge_list.begin(), edge_list.end());
        std::string key;
        for (const auto& [a, b] : edge_list) {
            key += static_cast<char>(a);
            key += static_cast<char>(b);
        }
        return key;
    };
    std::uint64_t combos = 1;
    for (int v = 0; v < n; ++v) combos *= 4;
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t x = c;
        for (int v = 0; v < n; ++v) {
            choice[static_cast<std::size_t>(v)] = static_cast<int>(x & 3);
            x >>= 2;
        }
        std::string key = encode();
        if (best.empty() || key < best) best = std::move(key);
    }
    // vertex names pin the correspondence between the two graphs
    for (int i = 0; i < n; ++i) best += "|" + med.graph.vertex_name(order[static_cast<std::size_t>(i)]);
    return best;
}

} // namespace

bool equivalent_ribbon(const RibbonGraph& a, const RibbonGraph& b) {
    const Medial ma = medial(a);
    const Medial mb = medial(b);
    if (ma.isolated_disks != mb.isolated_disks) return false;
    if (ma.graph.num_vertices() != mb.graph.num_vertices()) return false;
    return canonical_medial_key(ma) == canonical_medial_key(mb);
}

SparsePoly bollobas_riordan(const RibbonGraph& g) {
    return bollobas_riordan(g, std::vector<BigInt>(static_cast<std::size_t>(g.num_edges()), BigInt(1)));
}

SparsePoly bollobas_riordan(const RibbonGraph& g, const std::vector<BigInt>& edge_weights) {
    const int m = g.num_edges();
    if (m > 20) throw budget_error("bollobas_riordan: more than 20 edges");
    if (static_cast<int>(edge_weights.size()) != m)
        throw input_error("bollobas_riordan: weight arity mismatch");

    Multigraph underlying;
    underlying.num_vertices = g.num_vertices();
    for (const auto& e : g.edges)
        underlying.edges.push_back(
            {g.vertex_of_half_edge(e.h1), g.vertex_of_half_edge(e.h2), e.name});
    const BinaryMatroid cycles = cycle_matroid(underlying);
    const int rank_e = rank_full(cycles);

    const SparsePoly xm1 = SparsePoly::variable("x") - SparsePoly(1);
    const SparsePoly y = SparsePoly::variable("y");
    const SparsePoly z = SparsePoly::variable("z");

    SparsePoly total;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        const int size = std::popcount(mask);
        const int r = rank(cycles, mask);
        // components of the spanning subgraph, isolated vertices included
        std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()));
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&](int x) {
            while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
            return x;
        };
        int k = g.num_vertices();
        for (int e = 0; e < m; ++e) {
            if (!((mask >> e) & 1)) continue;
            const int u = find(underlying.edges[static_cast<std::size_t>(e)].u);
            const int v = find(underlying.edges[static_cast<std::size_t>(e)].v);
            if (u != v) {
                comp[static_cast<std::size_t>(u)] = v;
                --k;
            }
        }
        const int f = boundary_components(g, mask);
        BigInt weight = 1;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) weight *= edge_weights[static_cast<std::size_t>(e)];
        total += SparsePoly(weight) * xm1.pow(rank_e - r) * y.pow(size - r) *
                 z.pow(k - f + size - r);
    }
    return total;
}

RibbonGraph random_ribbon(int num_vertices, int num_edges, std::mt19937_64& rng) {
    if (num_vertices < 1) throw input_error("random_ribbon: need at least one vertex");
    RibbonGraph g;
    for (int v = 0; v < num_vertices; ++v) g.vertex_names.push_back("r" + std::to_string(v));
    g.rotation.resize(static_cast<std::size_t>(num_vertices));
    std::uniform_int_distribution<int> pick_vertex(0, num_vertices - 1);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    for (int e = 0; e < num_edges; ++e) {
        const int u = pick_vertex(rng);
        const int v = pick_vertex(rng);
        g.edges.push_back({2 * e, 2 * e + 1, pick_sign(rng) ? 1 : -1, "e" + std::to_string(e)});
        g.rotation[static_cast<std::size_t>(u)].push_back(2 * e);
        g.rotation[static_cast<std::size_t>(v)].push_back(2 * e + 1);
    }
    for (auto& rot : g.rotation) std::shuffle(rot.begin(), rot.end(), rng);
    return g;
}

} // namespace tmat
