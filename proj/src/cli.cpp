#include "tmat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tmat/errors.hpp"
#include "tmat/knots.hpp"
#include "tmat/matroid.hpp"
#include "tmat/polyops.hpp"
#include "tmat/ribbon.hpp"
#include "tmat/words.hpp"

namespace tmat {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

FourRegularGraph load_graph(const std::string& path) {
    return FourRegularGraph::build(parse_frg(slurp(path)));
}

void emit_poly(std::ostream& out, bool json, const std::string& label, const SparsePoly& p) {
    if (json)
        out << nlohmann::json{{"polynomial", p.to_json()}}.dump(2) << "\n";
    else
        out << label << ": " << p.pretty() << "\n";
}

std::vector<std::string> circuit_words(const FourRegularGraph& g, const CircuitPartition& p) {
    std::vector<std::string> words;
    for (const auto& circuit : p.circuits) {
        std::string w;
        for (std::size_t i = 0; i < circuit.half_edges.size(); i += 2) {
            if (!w.empty()) w += " ";
            w += g.vertex_name(circuit.half_edges[i] / 4);
        }
        words.push_back(w);
    }
    return words;
}

std::pair<int, int> parse_index_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw input_error("expected two comma-separated indices: " + text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

TransitionWeights load_transition_weights(const FourRegularGraph& g, const std::string& path) {
    TransitionWeights w = TransitionWeights::ones(g.num_vertices());
    if (path.empty()) return w;
    std::istringstream in(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name) || name[0] == '#') continue;
        long w0, w1, w2;
        if (!(ls >> w0 >> w1 >> w2))
            throw input_error("weights line " + std::to_string(lineno) + ": need three integers");
        const int v = g.vertex_index(name);
        w.weight[static_cast<std::size_t>(v)] = {BigInt(w0), BigInt(w1), BigInt(w2)};
    }
    return w;
}

} // namespace

nlohmann::json graph_to_json(const FourRegularGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_names();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [h, m] : g.edges())
        edges.push_back(nlohmann::json::array(
            {g.vertex_name(h / 4), h % 4, g.vertex_name(m / 4), m % 4}));
    j["edges"] = edges;
    return j;
}

FourRegularGraph graph_from_json(const nlohmann::json& j) {
    GraphSpec spec;
    spec.vertices = j.at("vertices").get<std::vector<std::string>>();
    auto index_of = [&](const std::string& name) {
        for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v)
            if (spec.vertices[static_cast<std::size_t>(v)] == name) return v;
        throw input_error("graph JSON: unknown vertex " + name);
    };
    for (const auto& e : j.at("edges"))
        spec.edges.push_back({{index_of(e.at(0).get<std::string>()), e.at(1).get<int>()},
                              {index_of(e.at(2).get<std::string>()), e.at(3).get<int>()}});
    return FourRegularGraph::build(spec);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"transition matroids of 4-regular graphs and their polynomials"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string path, path2, transversal, t1_digits, t2_digits, weights_path;
    std::string vertex_name, dow_op;
    int pairing = 0, e1 = 0, e2 = 0, matching = 0, variant = 1;
    std::size_t cap = 1000000;
    std::string via = "both";
    bool directed = false, normalize = false, swap1 = false, swap2 = false;
    std::vector<std::string> pair_specs;
    std::string cyclic_spec, concat_spec, split_at_spec, turnaround_spec, vprime_spec;
    int reverse_word_idx = -1;

    auto* validate_cmd = app.add_subcommand("validate", "check 4-regularity of a graph file");
    validate_cmd->add_option("file", path)->required();

    auto* euler_cmd = app.add_subcommand("euler", "deterministic Euler system");
    euler_cmd->add_option("file", path)->required();

    auto* interlace_cmd = app.add_subcommand("interlace", "interlacement graph adjacency");
    interlace_cmd->add_option("file", path)->required();

    auto* rank_cmd = app.add_subcommand("rank", "rank of tau(P) in the transition matroid");
    rank_cmd->add_option("file", path)->required();
    rank_cmd->add_option("--transversal", transversal, "base-3 digits in vertex order")->required();

    auto* martin_cmd = app.add_subcommand("martin", "Martin polynomial");
    martin_cmd->add_option("file", path)->required();
    martin_cmd->add_flag("--directed", directed, "directed Martin polynomial of the Euler orientation");
    martin_cmd->add_option("--via", via, "direct | matroid | both")->check(CLI::IsMember({"direct", "matroid", "both"}));

    auto* tpoly_cmd = app.add_subcommand("transition-poly", "weighted transition polynomial");
    tpoly_cmd->add_option("file", path)->required();
    tpoly_cmd->add_option("--weights", weights_path, "per-vertex 'name w0 w1 w2' lines");

    auto* ipoly_cmd = app.add_subcommand("interlace-poly", "interlace polynomial of I(euler_system)");
    ipoly_cmd->add_option("file", path)->required();

    auto* touch_cmd = app.add_subcommand("touch", "touch-graph of a circuit partition");
    touch_cmd->add_option("file", path)->required();
    touch_cmd->add_option("--transversal", transversal)->required();

    auto* dual_cmd = app.add_subcommand("dual-pair", "rank report for two disjoint transversals");
    dual_cmd->add_option("file", path)->required();
    dual_cmd->add_option("--t1", t1_digits)->required();
    dual_cmd->add_option("--t2", t2_digits)->required();

    auto* planar_cmd = app.add_subcommand("planar", "planarity via the bipartite-interlacement orbit");
    planar_cmd->add_option("file", path)->required();
    planar_cmd->add_option("--cap", cap, "canonical-form budget");

    auto* detach_cmd = app.add_subcommand("detach", "detach a vertex along a transition");
    detach_cmd->add_option("file", path)->required();
    detach_cmd->add_option("--vertex", vertex_name)->required();
    detach_cmd->add_option("--pairing", pairing, "0, 1 or 2")->required();

    auto* sum_cmd = app.add_subcommand("sum", "connected sum of two graphs");
    sum_cmd->add_option("file1", path)->required();
    sum_cmd->add_option("file2", path2)->required();
    sum_cmd->add_option("--e1", e1, "edge index in file1")->required();
    sum_cmd->add_option("--e2", e2, "edge index in file2")->required();
    sum_cmd->add_option("--matching", matching, "0 or 1");

    auto* separate_cmd = app.add_subcommand("separate", "split along a 2-edge cut");
    separate_cmd->add_option("file", path)->required();
    separate_cmd->add_option("--e1", e1)->required();
    separate_cmd->add_option("--e2", e2)->required();

    auto* mutate_cmd = app.add_subcommand("mutate", "balanced mutation along a 4-edge cut");
    mutate_cmd->add_option("file", path)->required();
    mutate_cmd->add_option("--pair", pair_specs, "edge pair 'i,j' (give twice)")->expected(2);
    mutate_cmd->add_flag("--swap1", swap1, "re-cross the first pair");
    mutate_cmd->add_flag("--swap2", swap2, "re-cross the second pair");

    auto* medial_cmd = app.add_subcommand("medial", "medial 4-regular graph of a ribbon graph");
    medial_cmd->add_option("file", path)->required();

    auto* br_cmd = app.add_subcommand("ribbon-br", "Bollobas-Riordan polynomial of a ribbon graph");
    br_cmd->add_option("file", path)->required();

    auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a planar diagram code");
    bracket_cmd->add_option("file", path)->required();
    bracket_cmd->add_flag("--normalize", normalize, "multiply by (-A^3)^{-writhe}");

    auto* matroid_cmd = app.add_subcommand("matroid", "transition matroid dump");
    matroid_cmd->add_option("file", path)->required();

    auto* dow_cmd = app.add_subcommand("dow", "double occurrence word operations");
    dow_cmd->add_option("file", path)->required();
    dow_cmd->add_option("--op", dow_op, "canon | interlace | graph | split")
        ->check(CLI::IsMember({"canon", "interlace", "graph", "split"}));
    dow_cmd->add_option("--cyclic", cyclic_spec, "word,amount");
    dow_cmd->add_option("--reverse", reverse_word_idx, "word index");
    dow_cmd->add_option("--concat", concat_spec, "word1,word2");
    dow_cmd->add_option("--split-at", split_at_spec, "word,position");
    dow_cmd->add_option("--turnaround", turnaround_spec, "word,i,j,k");
    dow_cmd->add_option("--vprime", vprime_spec, "comma-separated V' letters");
    dow_cmd->add_option("--variant", variant, "turnaround variant 1..3");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "tmat";
    argv.push_back(prog.data());
    for (auto& a : storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*validate_cmd) {
            const GraphSpec spec = parse_frg(slurp(path));
            const auto issues = validate(spec);
            if (json) {
                out << nlohmann::json{{"ok", issues.empty()}, {"issues", issues}}.dump(2) << "\n";
            } else if (issues.empty()) {
                out << "ok\n";
            } else {
                for (const auto& issue : issues) out << issue << "\n";
            }
            return issues.empty() ? 0 : 1;
        }
        if (*euler_cmd) {
            const auto g = load_graph(path);
            const EulerSystem es = euler_system(g);
            const auto words = circuit_words(g, es.partition);
            if (json) {
                out << nlohmann::json{{"circuits", words},
                                      {"transversal", transversal_digits(es.partition.transversal)}}
                           .dump(2)
                    << "\n";
            } else {
                out << "circuits: " << es.size() << "\n";
                for (std::size_t i = 0; i < words.size(); ++i)
                    out << "word " << i << ": " << words[i] << "\n";
                out << "transversal: " << transversal_digits(es.partition.transversal) << "\n";
            }
            return 0;
        }
        if (*interlace_cmd) {
            const auto g = load_graph(path);
            const SimpleGraph h = interlacement(g, euler_system(g));
            std::vector<std::string> rows;
            for (int i = 0; i < h.size(); ++i) {
                std::string row;
                for (int j = 0; j < h.size(); ++j) row += h.adjacent(i, j) ? '1' : '0';
                rows.push_back(row);
            }
            if (json) {
                out << nlohmann::json{{"vertices", h.names}, {"adjacency", rows}}.dump(2) << "\n";
            } else {
                out << "vertices:";
                for (const auto& name : h.names) out << " " << name;
                out << "\n";
                for (int i = 0; i < h.size(); ++i) out << h.names[static_cast<std::size_t>(i)] << ": " << rows[static_cast<std::size_t>(i)] << "\n";
            }
            return 0;
        }
        if (*rank_cmd) {
            const auto g = load_graph(path);
            const Transversal t = parse_transversal(transversal, g.num_vertices());
            const int circuits = count_circuits(g, t);
            const TransitionMatroid tm = transition_matroid(g, euler_system(g));
            const int r = rank(tm.matroid, tm.transversal_mask(t));
            const int predicted = g.num_vertices() + g.num_components() - circuits;
            if (r != predicted)
                throw consistency_error("circuit-nullity formula violated: rank " + std::to_string(r) +
                                        " vs n+c-|P| = " + std::to_string(predicted));
            if (json) {
                out << nlohmann::json{{"transversal", transversal},
                                      {"circuits", circuits},
                                      {"rank", r}}
                           .dump(2)
                    << "\n";
            } else {
                out << "transversal: " << transversal << "\n";
                out << "|P|: " << circuits << "\n";
                out << "rank(tau(P)): " << r << "\n";
            }
            return 0;
        }
        if (*martin_cmd) {
            const auto g = load_graph(path);
            SparsePoly p;
            if (directed) {
                p = directed_martin(g, balanced_orientation(g));
                emit_poly(out, json, "directed martin", p);
            } else {
                if (via == "direct")
                    p = martin_direct(g);
                else if (via == "matroid")
                    p = martin_via_matroid(g);
                else
                    p = martin_checked(g);
                emit_poly(out, json, "martin", p);
            }
            return 0;
        }
        if (*tpoly_cmd) {
            const auto g = load_graph(path);
            emit_poly(out, json, "transition polynomial",
                      transition_poly(g, load_transition_weights(g, weights_path)));
            return 0;
        }
        if (*ipoly_cmd) {
            const auto g = load_graph(path);
            emit_poly(out, json, "interlace polynomial",
                      interlace_poly(interlacement(g, euler_system(g))));
            return 0;
        }
        if (*touch_cmd) {
            const auto g = load_graph(path);
            const Transversal t = parse_transversal(transversal, g.num_vertices());
            const TouchGraph tg = touch_graph(g, trace_partition(g, t));
            if (json) {
                nlohmann::json edges = nlohmann::json::array();
                for (const auto& e : tg.edges)
                    edges.push_back(nlohmann::json::array({e.u, e.v, g.vertex_name(e.graph_vertex)}));
                out << nlohmann::json{{"circuits", tg.num_vertices}, {"edges", edges}}.dump(2) << "\n";
            } else {
                out << "touch vertices: " << tg.num_vertices << "\n";
                for (const auto& e : tg.edges)
                    out << "edge " << g.vertex_name(e.graph_vertex) << ": " << e.u << " - " << e.v << "\n";
            }
            return 0;
        }
        if (*dual_cmd) {
            const auto g = load_graph(path);
            const Transversal t1 = parse_transversal(t1_digits, g.num_vertices());
            const Transversal t2 = parse_transversal(t2_digits, g.num_vertices());
            const DualPairReport report = check_dual_pair(g, t1, t2);
            if (json) {
                out << nlohmann::json{{"r1", report.r1},
                                      {"r2", report.r2},
                                      {"dual_pair", report.is_dual_pair},
                                      {"consistent", report.consistency_ok}}
                           .dump(2)
                    << "\n";
            } else {
                out << "r1: " << report.r1 << "\n";
                out << "r2: " << report.r2 << "\n";
                out << "dual pair: " << (report.is_dual_pair ? "yes" : "no") << "\n";
            }
            if (!report.consistency_ok) {
                err << "internal consistency failure: " << report.detail << "\n";
                return 3;
            }
            return 0;
        }
        if (*planar_cmd) {
            const auto g = load_graph(path);
            const PlanarityAnswer answer = is_planar(g, cap);
            const std::string text = answer.result == Planarity::yes  ? "yes"
                                     : answer.result == Planarity::no ? "no"
                                                                      : "budget_exceeded";
            if (json)
                out << nlohmann::json{{"planar", text}, {"states", answer.states_explored}}.dump(2)
                    << "\n";
            else
                out << "planar: " << text << "\n";
            return answer.result == Planarity::budget_exceeded ? 2 : 0;
        }
        if (*detach_cmd) {
            const auto g = load_graph(path);
            const int v = g.vertex_index(vertex_name);
            if (pairing < 0 || pairing > 2) throw input_error("pairing must be 0, 1 or 2");
            const Detached d = detachment(g, {v, pairing});
            if (json)
                out << graph_to_json(d.graph).dump(2) << "\n";
            else
                out << to_frg(d.graph);
            return 0;
        }
        if (*sum_cmd) {
            const auto g1 = load_graph(path);
            const auto g2 = load_graph(path2);
            const auto result = connected_sum(g1, e1, g2, e2, matching);
            if (json)
                out << graph_to_json(result).dump(2) << "\n";
            else
                out << to_frg(result);
            return 0;
        }
        if (*separate_cmd) {
            const auto g = load_graph(path);
            const auto result = separation(g, e1, e2);
            if (json)
                out << graph_to_json(result).dump(2) << "\n";
            else
                out << to_frg(result);
            return 0;
        }
        if (*mutate_cmd) {
            const auto g = load_graph(path);
            const auto p1 = parse_index_pair(pair_specs.at(0));
            const auto p2 = parse_index_pair(pair_specs.at(1));
            const auto result = balanced_mutation(g, p1, p2, swap1, swap2);
            if (json)
                out << graph_to_json(result).dump(2) << "\n";
            else
                out << to_frg(result);
            return 0;
        }
        if (*medial_cmd) {
            const RibbonGraph g = parse_ribbon(slurp(path));
            const Medial med = medial(g);
            if (json) {
                out << nlohmann::json{{"graph", graph_to_json(med.graph)},
                                      {"delta", transversal_digits(med.delta)},
                                      {"eps", transversal_digits(med.eps)}}
                           .dump(2)
                    << "\n";
            } else {
                out << to_frg(med.graph);
                out << "# delta: " << transversal_digits(med.delta) << "\n";
                out << "# eps: " << transversal_digits(med.eps) << "\n";
            }
            return 0;
        }
        if (*br_cmd) {
            const RibbonGraph g = parse_ribbon(slurp(path));
            emit_poly(out, json, "bollobas-riordan", bollobas_riordan(g));
            return 0;
        }
        if (*bracket_cmd) {
            const PlanarDiagramCode pd = parse_pd(slurp(path));
            if (normalize) {
                if (!pd.writhe) throw input_error("--normalize needs a 'writhe:' header");
                emit_poly(out, json, "normalized bracket", normalized_bracket(pd, *pd.writhe));
            } else {
                emit_poly(out, json, "bracket", bracket(pd));
            }
            return 0;
        }
        if (*matroid_cmd) {
            const auto g = load_graph(path);
            const TransitionMatroid tm = transition_matroid(g, euler_system(g));
            if (json) {
                std::vector<std::string> rows;
                for (int i = 0; i < tm.matroid.rep.rows(); ++i) {
                    std::string row;
                    for (int j = 0; j < tm.matroid.rep.cols(); ++j)
                        row += tm.matroid.rep.get(i, j) ? '1' : '0';
                    rows.push_back(row);
                }
                out << nlohmann::json{{"ground", tm.matroid.ground}, {"rows", rows}}.dump(2) << "\n";
            } else {
                out << dump(tm.matroid);
            }
            return 0;
        }
        if (*dow_cmd) {
            DowFamily f = parse_dow(slurp(path));
            if (!cyclic_spec.empty()) {
                const auto [w, amount] = parse_index_pair(cyclic_spec);
                f = apply_equivalence(f, CyclicPermute{w, amount});
            }
            if (reverse_word_idx >= 0) f = apply_equivalence(f, ReverseWord{reverse_word_idx});
            if (!concat_spec.empty()) {
                const auto [w1, w2] = parse_index_pair(concat_spec);
                f = apply_equivalence(f, Concatenate{w1, w2});
            }
            if (!split_at_spec.empty()) {
                const auto [w, pos] = parse_index_pair(split_at_spec);
                f = apply_equivalence(f, SplitWord{w, pos});
            }
            if (!turnaround_spec.empty()) {
                std::istringstream ts(turnaround_spec);
                int w, i, j, k;
                char comma;
                if (!(ts >> w >> comma >> i >> comma >> j >> comma >> k))
                    throw input_error("--turnaround needs word,i,j,k");
                std::set<std::string> vprime;
                std::istringstream vs(vprime_spec);
                std::string letter;
                while (std::getline(vs, letter, ','))
                    if (!letter.empty()) vprime.insert(letter);
                f = turnaround(f, w, {i, j, k}, vprime, variant);
            }
            if (dow_op == "interlace") {
                const SimpleGraph h = interlacement_of(f);
                std::vector<std::string> rows;
                for (int i = 0; i < h.size(); ++i) {
                    std::string row;
                    for (int j = 0; j < h.size(); ++j) row += h.adjacent(i, j) ? '1' : '0';
                    rows.push_back(row);
                }
                if (json) {
                    out << nlohmann::json{{"vertices", h.names}, {"adjacency", rows}}.dump(2) << "\n";
                } else {
                    out << "vertices:";
                    for (const auto& name : h.names) out << " " << name;
                    out << "\n";
                    for (int i = 0; i < h.size(); ++i)
                        out << h.names[static_cast<std::size_t>(i)] << ": " << rows[static_cast<std::size_t>(i)] << "\n";
                }
            } else if (dow_op == "graph") {
                const auto [g, es] = graph_from_family(f);
                if (json)
                    out << graph_to_json(g).dump(2) << "\n";
                else
                    out << to_frg(g);
            } else if (dow_op == "split") {
                nlohmann::json parts = nlohmann::json::array();
                for (const auto& w : f.words) {
                    const auto split = split_concatenation(w);
                    if (!split) {
                        if (!json) out << "connected: " << to_dow_text(DowFamily{{w}}) << "\n";
                        parts.push_back(nullptr);
                    } else {
                        DowFamily two{{split->first, split->second}};
                        if (!json) out << "split: " << to_dow_text(two) << "\n";
                        parts.push_back(to_dow_text(two));
                    }
                }
                if (json) out << nlohmann::json{{"splits", parts}}.dump(2) << "\n";
            } else { // canon (default)
                const DowFamily canon = canonical_family(f);
                if (json)
                    out << nlohmann::json{{"family", to_dow_text(canon)}}.dump(2) << "\n";
                else
                    out << to_dow_text(canon) << "\n";
            }
            return 0;
        }
    } catch (const budget_error& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace tmat
