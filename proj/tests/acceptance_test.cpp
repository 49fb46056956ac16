// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dw/claims.hpp"
#include "dw/enumerate.hpp"
#include "dw/graph6.hpp"
#include "dw/isomorphism.hpp"
#include "dw/realizability.hpp"
#include "dw/recognition.hpp"
#include "dw/relation.hpp"

using namespace dw;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& info) {
    std::cout << "criterion " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!info.empty()) std::cout << " [" << info << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

EdgePartition normalized(const EdgePartition& p) {
    EdgePartition out;
    out.class_of.assign(p.class_of.size(), -1);
    std::vector<int> relabel(static_cast<std::size_t>(p.count), -1);
    for (std::size_t e = 0; e < p.class_of.size(); ++e) {
        int& r = relabel[static_cast<std::size_t>(p.class_of[e])];
        if (r == -1) r = out.count++;
        out.class_of[e] = r;
    }
    return out;
}

// All part-size multisets (ascending) with the given part count and total.
void part_multisets(int parts, int total, int minimum, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (total >= minimum) {
            acc.push_back(total);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (int s = minimum; s * parts <= total; ++s) {
        acc.push_back(s);
        part_multisets(parts - 1, total - s, s, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> multipartite_instances_up_to(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    for (int parts : {3, 4})
        for (int total = parts; total <= max_total; ++total)
            part_multisets(parts, total, 1, acc, out);
    return out;
}

Graph permuted(const Graph& g, std::mt19937& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const Edge& e : g.edges())
        es.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph::from_edges(g.vertex_count(), es);
}

Graph flip_adjacency(const Graph& g, Vertex u, Vertex v) {
    std::vector<std::pair<Vertex, Vertex>> es;
    bool removed = false;
    for (const Edge& e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            removed = true;
            continue;
        }
        es.emplace_back(e.u, e.v);
    }
    if (!removed) es.emplace_back(u, v);
    return Graph::from_edges(g.vertex_count(), es);
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

// ---- criteria ----

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    CorpusSpec spec;
    spec.max_n = 7;
    spec.connected_only = true;
    std::vector<Graph> corpus = enumerate_to_vector(spec);

    const std::vector<std::string> ids{
        "theta-implies-delta-pair",
        "delta-size-characterizations",
        "nonadjacent-delta3-iff-diameter",
        "block-graph-iff-nonadjacent-complement",
        "all-nonadjacent-related-iff-small-free",
        "single-class-characterization",
        "several-classes-iff-multipartite-3-4",
        "class-count-one-or-three",
    };
    std::vector<Claim> selected;
    for (const auto& id : ids) selected.push_back(claim_by_id(id));
    PropertyReport rep = run_claims(selected, corpus, worker_count());

    bool pass = rep.all_passed();
    std::ostringstream info;
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    info << corpus.size() << " connected graphs, " << ids.size() << " claims, " << dt.count() << " ms";
    for (const auto& c : rep.claims)
        if (!c.passed())
            info << "; FAILED " << c.id << " on " << c.failures.front().graph6 << " ("
                 << c.failures.front().detail << ")";
    report(1, "exhaustive claim suite, connected n<=7", pass, info.str());
}

void criterion2() {
    CorpusSpec spec;
    spec.max_n = 7;
    std::vector<Graph> corpus = enumerate_to_vector(spec);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        int parts = 1 + static_cast<int>(rng() % 5);
        int remaining = 12;
        PartSizes sizes;
        for (int i = 0; i < parts; ++i) {
            int slack = remaining - (parts - 1 - i);
            int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(4, slack)));
            sizes.push_back(s);
            remaining -= s;
        }
        corpus.push_back(permuted(complete_multipartite(sizes), rng));
    }

    long checked = 0;
    std::string fail_info;
    for (const Graph& g : corpus) {
        ++checked;
        EdgePartition fast = normalized(theta_bar_classes_distance_free(g));
        EdgePartition slow = normalized(closure_classes(relation_graph(g, RelationKind::ThetaBar)));
        if (!(fast == slow)) {
            fail_info = "mismatch on " + emit_graph6(g);
            break;
        }
    }
    report(2, "distance-free class agreement", fail_info.empty(),
           fail_info.empty() ? std::to_string(checked) + " graphs (corpus n<=7 + 50 random multipartite)"
                             : fail_info);
}

void criterion3() {
    bool pass = true;
    std::ostringstream info;

    {
        Graph k = complete_multipartite({1, 2, 4});
        EdgeRelation rel = relation_graph(k, RelationKind::ThetaBar);
        auto comps = connected_components(rel.graph).groups();
        std::vector<std::pair<std::size_t, const char*>> want{
            {2, "K1[]K2"}, {4, "K1[]K4"}, {8, "K4[]K2"}};
        std::vector<Graph> expected{cartesian_product(complete(1), complete(2)).graph,
                                    cartesian_product(complete(1), complete(4)).graph,
                                    cartesian_product(complete(4), complete(2)).graph};
        if (comps.size() != 3) pass = false;
        std::vector<std::size_t> sizes;
        for (const auto& c : comps) sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        if (sizes != std::vector<std::size_t>{2, 4, 8}) pass = false;
        if (pass)
            for (std::size_t i = 0; i < comps.size(); ++i) {
                Graph comp;
                for (const auto& c : comps)
                    if (c.size() == want[i].first) comp = induced_subgraph(rel.graph, c);
                if (!is_isomorphic(comp, expected[i])) {
                    pass = false;
                    info << "three-part component of size " << want[i].first << " mismatch; ";
                }
            }
    }
    {
        Graph k = complete_multipartite({1, 1, 2, 3});
        EdgeRelation rel = relation_graph(k, RelationKind::ThetaBar);
        auto comps = connected_components(rel.graph).groups();
        std::vector<std::size_t> sizes;
        for (const auto& c : comps) sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        if (comps.size() != 3 || sizes != std::vector<std::size_t>{5, 5, 7}) pass = false;
        Graph five = join(cartesian_product(complete(1), complete(3)).graph,
                          cartesian_product(complete(1), complete(2)).graph);
        Graph seven = join(cartesian_product(complete(3), complete(2)).graph,
                           cartesian_product(complete(1), complete(1)).graph);
        if (pass)
            for (const auto& c : comps) {
                Graph comp = induced_subgraph(rel.graph, c);
                const Graph& expect = c.size() == 7 ? seven : five;
                if (!is_isomorphic(comp, expect)) {
                    pass = false;
                    info << "four-part component of size " << c.size() << " mismatch; ";
                }
            }
    }
    report(3, "figure reproduction", pass, info.str());
}

void criterion4() {
    bool pass = true;
    std::ostringstream info;
    for (int n = 2; n <= 6; ++n) {
        EdgeRelation even = relation_graph(cycle(2 * n), RelationKind::Theta);
        EdgePartition pe = closure_classes(even);
        if (pe.count != n || !is_closed(even)) {
            pass = false;
            info << "C" << 2 * n << " wrong; ";
        }
        EdgeRelation odd = relation_graph(cycle(2 * n + 1), RelationKind::Theta);
        EdgePartition po = closure_classes(odd);
        if (po.count != 1 || is_closed(odd)) {
            pass = false;
            info << "C" << 2 * n + 1 << " wrong; ";
        }
    }
    report(4, "cycle classes", pass, info.str());
}

void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream info;

    // round trip on every complete multipartite with 3 or 4 parts, <= 9 vertices
    int round_trips = 0;
    for (const auto& sizes : multipartite_instances_up_to(9)) {
        Graph k = complete_multipartite(sizes);
        EdgeRelation rel = relation_graph(k, RelationKind::ThetaBar);
        RealizationResult r = realize_theta_bar(rel);
        ++round_trips;
        if (!r.realizable) {
            pass = false;
            info << "round trip failed for parts of total " << k.vertex_count() << "; ";
            continue;
        }
        EdgeRelation back = relation_graph(*r.reconstructed, RelationKind::ThetaBar);
        if (!is_isomorphic(back.graph, rel.graph)) {
            pass = false;
            info << "reconstruction not isomorphic; ";
        }
    }

    // every connected corpus graph (n <= 6) that is not complete multipartite
    // with 3 or 4 parts yields a non-realizable relation graph
    CorpusSpec spec;
    spec.max_n = 6;
    spec.connected_only = true;
    int rejections = 0;
    for (const Graph& g : enumerate_to_vector(spec)) {
        auto parts = is_complete_multipartite(g);
        bool expect = parts && (parts->size() == 3 || parts->size() == 4);
        RealizationResult r = realize_theta_bar(relation_graph(g, RelationKind::ThetaBar));
        if (!expect) ++rejections;
        if (r.realizable != expect) {
            pass = false;
            info << "verdict wrong for " << emit_graph6(g) << "; ";
        }
    }

    // single-adjacency perturbations of the two figure instances are rejected
    int perturbations = 0;
    for (const PartSizes& sizes : {PartSizes{1, 2, 4}, PartSizes{1, 1, 2, 3}}) {
        Graph rel = relation_graph(complete_multipartite(sizes), RelationKind::ThetaBar).graph;
        for (Vertex u = 0; u < rel.vertex_count(); ++u)
            for (Vertex v = u + 1; v < rel.vertex_count(); ++v) {
                ++perturbations;
                RealizationResult r = realize_theta_bar(EdgeRelation{flip_adjacency(rel, u, v)});
                if (r.realizable) {
                    pass = false;
                    info << "perturbation (" << u << "," << v << ") accepted; ";
                }
            }
    }

    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::ostringstream summary;
    summary << round_trips << " round trips, " << rejections << " rejections, " << perturbations
            << " perturbations, " << dt.count() << " ms";
    report(5, "realizability round trip", pass, pass ? summary.str() : info.str());
}

void criterion6() {
    CorpusSpec spec;
    spec.max_n = 7;
    long checked = 0;
    std::string fail;
    for (const Graph& g : enumerate_to_vector(spec)) {
        ++checked;
        std::string code = emit_graph6(g);
        Graph back = parse_graph6(code);
        if (!(back == g) || emit_graph6(back) != code) {
            fail = "round trip failed for " + code;
            break;
        }
    }
    report(6, "graph6 round trip", fail.empty(),
           fail.empty() ? std::to_string(checked) + " graphs" : fail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED" << std::endl;
    return 1;
}
