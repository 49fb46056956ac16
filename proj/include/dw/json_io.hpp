#pragma once

#include <json.hpp>

#include "dw/claims.hpp"
#include "dw/graph6.hpp"
#include "dw/realizability.hpp"
#include "dw/recognition.hpp"

namespace dw {

// JSON report schemas. Object keys are emitted in sorted order by the json
// library, so output is byte-stable. All schemas carry a `schema` version.

inline nlohmann::json to_json(const RecognitionReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["m"] = r.m;
    j["connected"] = r.connected;
    j["is_tree"] = r.tree;
    j["is_block_graph"] = r.block_graph;
    j["non_clique_block"] = r.non_clique_block ? nlohmann::json(*r.non_clique_block)
                                               : nlohmann::json(nullptr);
    j["is_complete_multipartite"] = r.multipartite_parts.has_value();
    j["part_sizes"] = r.multipartite_parts ? nlohmann::json(*r.multipartite_parts)
                                           : nlohmann::json(nullptr);
    j["is_paw_free"] = r.paw_free;
    j["paw_witness"] = r.paw_witness ? nlohmann::json(*r.paw_witness) : nlohmann::json(nullptr);
    j["is_k3_free"] = r.k3_free;
    j["k3_witness"] = r.k3_witness ? nlohmann::json(*r.k3_witness) : nlohmann::json(nullptr);
    j["diameter"] = r.diam.is_finite() ? nlohmann::json(r.diam.value())
                                       : nlohmann::json("infinity");
    j["diameter_le_2"] = r.diameter_le_2;
    j["theta_bar_star_trivial"] = r.theta_bar_star_trivial;
    j["theta_bar_class_count"] = r.theta_bar_class_count;
    j["theta_bar_class_sizes"] = r.theta_bar_class_sizes;
    return j;
}

inline nlohmann::json to_json(const RealizationResult& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["realizable"] = r.realizable;
    if (r.realizable) {
        j["case"] = r.case_tag == RealizationCase::ThreeParts ? "three_parts" : "four_parts";
        j["part_sizes"] = r.part_sizes;
        j["graph6"] = emit_graph6(*r.reconstructed);
        j["parts"] = *complete_multipartite_parts(*r.reconstructed);
        nlohmann::json edges = nlohmann::json::array();
        for (const Edge& e : r.vertex_to_edge) edges.push_back({e.u, e.v});
        j["edge_of_relation_vertex"] = edges;
        j["failure_reason"] = nullptr;
    } else {
        j["case"] = nullptr;
        j["part_sizes"] = nullptr;
        j["graph6"] = nullptr;
        j["parts"] = nullptr;
        j["edge_of_relation_vertex"] = nullptr;
        j["failure_reason"] = r.failure_reason;
    }
    return j;
}

// Relation-graph input as a JSON pair list:
//   {"schema": 1, "vertices": m, "pairs": [[e,f], ...]}
// Vertices are edge ids of the host graph; reflexive pairs are implicit and
// must not be listed.
inline EdgeRelation relation_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("relation JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("pairs"))
        throw std::invalid_argument("relation JSON: need an object with 'vertices' and 'pairs'");
    int m = j.at("vertices").get<int>();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("relation JSON: each pair must be a two-element array");
        int a = p[0].get<int>(), b = p[1].get<int>();
        if (a == b)
            throw std::invalid_argument(
                "relation JSON: reflexive pairs are implicit; list only distinct pairs");
        pairs.emplace_back(a, b);
    }
    return EdgeRelation{Graph::from_edges(m, pairs)};
}

inline nlohmann::json to_json(const PropertyReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["corpus_size"] = r.corpus_size;
    j["pass"] = r.all_passed();
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) {
        nlohmann::json cj;
        cj["id"] = c.id;
        cj["description"] = c.description;
        cj["checked"] = c.checked;
        cj["pass"] = c.passed();
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& f : c.failures) fails.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
        cj["counterexamples"] = fails;
        claims.push_back(cj);
    }
    j["claims"] = claims;
    return j;
}

}  // namespace dw
