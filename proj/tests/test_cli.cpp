#include <catch2/catch.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "dw/cli.hpp"
#include "dw/graph6.hpp"

using namespace dw;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate subcommands") {
    CliRun mp = run({"generate", "multipartite", "1,2,4"});
    REQUIRE(mp.code == 0);
    REQUIRE(mp.out == emit_graph6(complete_multipartite({1, 2, 4})) + "\n");

    CliRun prod = run({"generate", "product", "K3", "K2"});
    REQUIRE(prod.code == 0);
    REQUIRE(prod.out == emit_graph6(cartesian_product(complete(3), complete(2)).graph) + "\n");

    CliRun jn = run({"generate", "join", "C4", "K1"});
    REQUIRE(jn.code == 0);
    REQUIRE(jn.out == emit_graph6(join(cycle(4), Graph(1))) + "\n");

    REQUIRE(run({"generate", "product", "Q3", "K2"}).code == 2);
    REQUIRE(run({"generate", "multipartite", "1,0,4"}).code == 2);
}

TEST_CASE("classes with and without the fast path agree") {
    std::string g6 = emit_graph6(complete_multipartite({1, 2, 4}));
    CliRun slow = run({"classes", g6, "--which", "thetabar"});
    CliRun fast = run({"classes", g6, "--which", "thetabar", "--fast"});
    REQUIRE(slow.code == 0);
    REQUIRE(fast.code == 0);
    REQUIRE(slow.out == fast.out);
    REQUIRE(slow.out.find("classes 3") == 0);

    // sizes {2,4,8} in some order
    std::vector<std::size_t> sizes;
    std::istringstream lines(slow.out);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line))
        sizes.push_back(static_cast<std::size_t>(std::count(line.begin(), line.end(), '-')));
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<std::size_t>{2, 4, 8});

    // --fast needs the complement relation
    REQUIRE(run({"classes", g6, "--which", "theta", "--fast"}).code == 2);

    // --no-verify skips the cross-check but prints the same partition
    CliRun unchecked = run({"classes", g6, "--which", "thetabar", "--fast", "--no-verify"});
    REQUIRE(unchecked.code == 0);
    REQUIRE(unchecked.out == fast.out);
}

TEST_CASE("relation output") {
    std::string g6 = emit_graph6(cycle(4));
    CliRun pairs = run({"relation", g6, "--which", "theta"});
    REQUIRE(pairs.code == 0);
    // C4 has exactly the two antipodal pairs
    REQUIRE(pairs.out.find("0 3\n") != std::string::npos);
    REQUIRE(pairs.out.find("1 2\n") != std::string::npos);

    CliRun dot = run({"relation", g6, "--which", "thetabar", "--dot"});
    REQUIRE(dot.code == 0);
    REQUIRE(dot.out.find("graph G {") == 0);
    REQUIRE(dot.out.find("label=\"01\"") != std::string::npos);
}

TEST_CASE("classify emits the recognition report") {
    CliRun tree = run({"classify", emit_graph6(path(4))});
    REQUIRE(tree.code == 0);
    REQUIRE(tree.out.find("\"is_tree\": true") != std::string::npos);
    REQUIRE(tree.out.find("\"theta_bar_star_trivial\": true") != std::string::npos);
    REQUIRE(tree.out.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("realize verdicts through the CLI") {
    // one connected component: rejected
    CliRun no = run({"realize", emit_graph6(cycle(5))});
    REQUIRE(no.code == 0);
    REQUIRE(no.out.find("\"realizable\": false") != std::string::npos);

    std::string rel_g6;
    {
        Graph k124 = complete_multipartite({1, 2, 4});
        rel_g6 = emit_graph6(relation_graph(k124, RelationKind::ThetaBar).graph);
    }
    CliRun yes = run({"realize", rel_g6});
    REQUIRE(yes.code == 0);
    REQUIRE(yes.out.find("\"realizable\": true") != std::string::npos);
    REQUIRE(yes.out.find("\"case\": \"three_parts\"") != std::string::npos);
    REQUIRE(yes.out.find("\"parts\"") != std::string::npos);

    // the relation subcommand feeds realize via --graph6
    CliRun exported = run({"relation", emit_graph6(complete_multipartite({1, 2, 4})), "--which",
                           "thetabar", "--graph6"});
    REQUIRE(exported.code == 0);
    REQUIRE(exported.out == rel_g6 + "\n");
}

TEST_CASE("realize accepts a JSON pair list") {
    // the triangle's complement relation: three isolated edge ids
    CliRun tri = run({"realize", R"({"schema":1,"vertices":3,"pairs":[]})", "--format", "json"});
    REQUIRE(tri.code == 0);
    REQUIRE(tri.out.find("\"realizable\": true") != std::string::npos);
    REQUIRE(tri.out.find("\"part_sizes\": [\n    1,\n    1,\n    1\n  ]") != std::string::npos);

    REQUIRE(run({"realize", "{not json", "--format", "json"}).code == 2);
    REQUIRE(run({"realize", R"({"vertices":2,"pairs":[[0,0]]})", "--format", "json"}).code == 2);
}

TEST_CASE("verify runs the suite") {
    CliRun ok = run({"verify", "--max-n", "4"});
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out.find("all claims passed") != std::string::npos);

    CliRun js = run({"verify", "--max-n", "3", "--json"});
    REQUIRE(js.code == 0);
    REQUIRE(js.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("cli determinism and error paths") {
    std::string g6 = emit_graph6(complete_multipartite({1, 1, 2, 3}));
    CliRun a = run({"classes", g6, "--which", "thetabar"});
    CliRun b = run({"classes", g6, "--which", "thetabar"});
    REQUIRE(a.out == b.out);

    // malformed graph6
    CliRun bad = run({"classify", "@@"});
    REQUIRE(bad.code == 2);
    REQUIRE(!bad.err.empty());

    // unknown flag
    REQUIRE(run({"classes", g6, "--which", "thetabar", "--frobnicate"}).code == 2);
    // unknown subcommand
    REQUIRE(run({"bogus"}).code == 2);
    // missing required option
    REQUIRE(run({"classes", g6}).code == 2);
}
