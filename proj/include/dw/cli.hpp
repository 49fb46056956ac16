#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dw/claims.hpp"
#include "dw/dot.hpp"
#include "dw/enumerate.hpp"
#include "dw/graph6.hpp"
#include "dw/json_io.hpp"
#include "dw/realizability.hpp"
#include "dw/recognition.hpp"
#include "dw/relation.hpp"

namespace dw {

namespace detail {

inline Graph parse_generator_atom(const std::string& token) {
    if (token.size() < 2) throw std::invalid_argument("bad graph name: '" + token + "'");
    char kind = token[0];
    std::string rest = token.substr(1);
    if (kind == 'K' && rest.find(',') != std::string::npos) {
        PartSizes sizes;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
        return complete_multipartite(sizes);
    }
    int n = 0;
    try {
        n = std::stoi(rest);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad graph name: '" + token + "'");
    }
    switch (kind) {
        case 'K': return complete(n);
        case 'C': return cycle(n);
        case 'P': return path(n);
        case 'S': return star(n);
        default: throw std::invalid_argument("bad graph name: '" + token + "' (use K/C/P/S<n> or Kn1,n2,...)");
    }
}

inline PartSizes parse_sizes(const std::string& csv) {
    PartSizes sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
    if (sizes.empty()) throw std::invalid_argument("empty part-size list");
    return sizes;
}

inline std::vector<std::string> relation_vertex_labels(const Graph& host) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(host.edge_count()));
    for (const Edge& e : host.edges()) labels.push_back(edge_label(e));
    return labels;
}

inline void print_partition(const Graph& host, const EdgePartition& p, std::ostream& out) {
    out << "classes " << p.count << "\n";
    for (int c = 0; c < p.count; ++c) {
        out << "class " << c << ":";
        for (EdgeId e = 0; e < host.edge_count(); ++e)
            if (p.class_of[static_cast<std::size_t>(e)] == c)
                out << " " << host.edge(e).u << "-" << host.edge(e).v;
        out << "\n";
    }
}

}  // namespace detail

// Exit codes: 0 success, 1 claim/cross-check failure, 2 usage or input error.
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Djokovic-Winkler edge relation toolkit: compute the relation and its reflexive "
                 "complement, classify graphs, decide realizability, verify the property suite"};
    app.name("dwtheta");
    app.require_subcommand(1);

    std::string g6_input, which = "thetabar", corpus_file, realize_format = "graph6";
    bool dot = false, g6_out = false, fast = false, no_verify = false, json_report = false;
    int max_n = 6, workers = 1;

    auto* rel_cmd = app.add_subcommand("relation", "print the relation graph over edge ids");
    rel_cmd->add_option("graph", g6_input, "host graph in graph6")->required();
    rel_cmd->add_option("--which", which, "theta or thetabar")
        ->check(CLI::IsMember({"theta", "thetabar"}))
        ->required();
    rel_cmd->add_flag("--dot", dot, "emit DOT with uv edge labels instead of a pair list");
    rel_cmd->add_flag("--graph6", g6_out, "emit the relation graph itself as graph6")
        ->excludes("--dot");

    auto* classes_cmd = app.add_subcommand("classes", "equivalence classes of the transitive closure");
    classes_cmd->add_option("graph6", g6_input, "host graph in graph6")->required();
    classes_cmd->add_option("--which", which, "theta or thetabar")
        ->check(CLI::IsMember({"theta", "thetabar"}))
        ->required();
    classes_cmd->add_flag("--fast", fast, "distance-free computation (thetabar only)");
    classes_cmd->add_flag("--no-verify", no_verify, "skip the cross-check of --fast");

    auto* classify_cmd = app.add_subcommand("classify", "recognition report as JSON");
    classify_cmd->add_option("graph6", g6_input, "graph in graph6")->required();

    auto* realize_cmd = app.add_subcommand("realize",
                                           "decide whether a relation graph is the reflexive "
                                           "complement of some graph's relation");
    realize_cmd->add_option("input", g6_input, "relation graph (graph6, or a JSON pair list)")
        ->required();
    realize_cmd->add_option("--format", realize_format, "input format")
        ->check(CLI::IsMember({"graph6", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the property suite over a corpus");
    auto* max_n_opt = verify_cmd->add_option("--max-n", max_n, "largest vertex count (built-in corpus)");
    auto* corpus_opt = verify_cmd->add_option("--corpus", corpus_file, "graph6 file instead of the built-in corpus");
    verify_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", json_report, "emit the report as JSON");

    auto* gen_cmd = app.add_subcommand("generate", "emit a generated graph as graph6");
    std::string sizes_csv;
    std::vector<std::string> atoms;
    auto* gen_mp = gen_cmd->add_subcommand("multipartite", "complete multipartite from part sizes");
    gen_mp->add_option("sizes", sizes_csv, "comma-separated part sizes, e.g. 1,2,4")->required();
    auto* gen_prod = gen_cmd->add_subcommand("product", "Cartesian product of two named graphs");
    gen_prod->add_option("factors", atoms, "two of K<n>/C<n>/P<n>/S<n>/Kn1,n2,...")->expected(2);
    auto* gen_join = gen_cmd->add_subcommand("join", "join of two named graphs");
    gen_join->add_option("factors", atoms, "two of K<n>/C<n>/P<n>/S<n>/Kn1,n2,...")->expected(2);
    gen_cmd->require_subcommand(1);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (rel_cmd->parsed()) {
            Graph g = parse_graph6(g6_input);
            RelationKind kind = which == "theta" ? RelationKind::Theta : RelationKind::ThetaBar;
            EdgeRelation r = relation_graph(g, kind);
            if (dot) {
                out << to_dot_labeled(r.graph, detail::relation_vertex_labels(g));
            } else if (g6_out) {
                out << emit_graph6(r.graph) << "\n";
            } else {
                out << "# edges " << g.edge_count() << "\n";
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    out << "# " << e << " = " << g.edge(e).u << "-" << g.edge(e).v << "\n";
                for (const Edge& p : r.graph.edges()) out << p.u << " " << p.v << "\n";
            }
            return 0;
        }
        if (classes_cmd->parsed()) {
            Graph g = parse_graph6(g6_input);
            if (fast) {
                if (which != "thetabar") {
                    err << "error: --fast is only available for --which thetabar\n";
                    return 2;
                }
                EdgePartition p = theta_bar_classes_distance_free(g);
                if (!no_verify) {
                    EdgePartition slow = closure_classes(relation_graph(g, RelationKind::ThetaBar));
                    if (!(p == slow)) {
                        err << "error: distance-free classes disagree with the distance-based "
                               "partition\n";
                        return 1;
                    }
                }
                detail::print_partition(g, p, out);
                return 0;
            }
            RelationKind kind = which == "theta" ? RelationKind::Theta : RelationKind::ThetaBar;
            EdgePartition p = closure_classes(relation_graph(g, kind));
            detail::print_partition(g, p, out);
            return 0;
        }
        if (classify_cmd->parsed()) {
            Graph g = parse_graph6(g6_input);
            out << to_json(recognize(g)).dump(2) << "\n";
            return 0;
        }
        if (realize_cmd->parsed()) {
            EdgeRelation r = realize_format == "json" ? relation_from_json(g6_input)
                                                      : EdgeRelation{parse_graph6(g6_input)};
            out << to_json(realize_theta_bar(r)).dump(2) << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            CorpusSpec spec;
            spec.max_n = *corpus_opt && !*max_n_opt ? 0 : max_n;
            if (*corpus_opt) spec.graph6_file = corpus_file;
            PropertyReport report = run_property_suite(spec, workers);
            if (json_report) out << to_json(report).dump(2) << "\n";
            else print_report(report, out);
            return report.all_passed() ? 0 : 1;
        }
        if (gen_cmd->parsed()) {
            Graph g;
            if (gen_mp->parsed()) g = complete_multipartite(detail::parse_sizes(sizes_csv));
            else if (gen_prod->parsed())
                g = cartesian_product(detail::parse_generator_atom(atoms[0]),
                                      detail::parse_generator_atom(atoms[1]))
                        .graph;
            else g = join(detail::parse_generator_atom(atoms[0]), detail::parse_generator_atom(atoms[1]));
            out << emit_graph6(g) << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace dw
