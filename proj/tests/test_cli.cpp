#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "stcut/gen.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "stcut");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = stcut::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(STCUT_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("bridges subcommand") {
    SUBCASE("chain") {
        const auto r = run({"bridges", "--input", fixture("chain.txt")});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(doc["schema_version"] == "1");
        CHECK(doc["kind"] == "bridges");
        CHECK(doc["sequence"] == json::parse("[[0,1],[1,2]]"));
        CHECK(doc["edge_ids"] == json::parse("[0,1]"));
        CHECK(doc["comp"] == json::parse("[1,2,3]"));
        CHECK_FALSE(doc.contains("path_used"));
    }
    SUBCASE("diamond via stdin") {
        const auto r = run({"bridges"}, "4 4 0 3\n0 1\n1 3\n0 2\n2 3\n");
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["sequence"] == json::array());
    }
    SUBCASE("six-node graph with path and stats") {
        const auto r = run({"bridges", "--input", fixture("six.txt"), "--path"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(doc["sequence"] == json::parse("[[0,1]]"));
        CHECK(doc["comp"] == json::parse("[1,2,2,2,2,2]"));
        CHECK(doc["components"] == json::parse("[[0],[1,2,3,4,5]]"));
        CHECK(doc["path_used"] == json::parse("[0,1,3,5]"));
        CHECK(doc["stats"]["n"] == 6);
        CHECK(doc["stats"]["m"] == 7);
        CHECK(doc["stats"]["path_len"] == 3);
        CHECK(doc["stats"]["phases"] == 2);
    }
    SUBCASE("key order is fixed") {
        const auto r = run({"bridges", "--input", fixture("six.txt")});
        const auto kind = r.out.find("\"kind\""), seq = r.out.find("\"sequence\""), comp = r.out.find("\"comp\"");
        CHECK(r.out.find("\"schema_version\"") < kind);
        CHECK(kind < seq);
        CHECK(seq < comp);
    }
    SUBCASE("output is byte-identical across runs and queue disciplines") {
        const auto a = run({"bridges", "--input", fixture("six.txt")});
        const auto b = run({"bridges", "--input", fixture("six.txt")});
        CHECK(a.out == b.out);
        const auto lifo = run({"bridges", "--input", fixture("six.txt"), "--queue", "lifo"});
        CHECK(json::parse(lifo.out)["comp"] == json::parse(a.out)["comp"]);
    }
    SUBCASE("tsv") {
        const auto r = run({"bridges", "--input", fixture("chain.txt"), "--format", "tsv"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("cut\t1\t0\t0\t1\ncut\t2\t1\t1\t2\n") != std::string::npos);
        CHECK(r.out.find("comp\t2\t3\n") != std::string::npos);
    }
    SUBCASE("labels") {
        const auto r = run({"bridges", "--input", fixture("six.txt"), "--labels", fixture("six_labels.txt")});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["sequence_labels"] == json::parse(R"([["src","a"]])"));
        const auto bad = run({"bridges", "--input", fixture("chain.txt"), "--labels", fixture("six_labels.txt")});
        CHECK(bad.code == 1);
    }
}

TEST_CASE("cuts subcommand") {
    CHECK(json::parse(run({"cuts", "--input", fixture("chain.txt")}).out)["sequence"] == json::parse("[1]"));
    CHECK(json::parse(run({"cuts", "--input", fixture("diamond.txt")}).out)["sequence"] == json::array());
    const auto six = json::parse(run({"cuts", "--input", fixture("six.txt")}).out);
    CHECK(six["kind"] == "articulation");
    CHECK(six["sequence"] == json::parse("[1,3]"));
    CHECK(six["comp"] == json::parse("[1,1,2,2,3,3]"));
    const auto labeled = run({"cuts", "--input", fixture("six.txt"), "--labels", fixture("six_labels.txt")});
    CHECK(json::parse(labeled.out)["sequence_labels"] == json::parse(R"(["a","c"])"));
}

TEST_CASE("exit codes") {
    const auto no_path = run({"bridges", "--input", fixture("unreachable.txt")});
    CHECK(no_path.code == 2);
    CHECK(json::parse(no_path.out)["status"] == "no_path");
    CHECK(run({"cuts", "--input", fixture("unreachable.txt")}).code == 2);

    const auto parse_error = run({"bridges", "--input", fixture("bad_count.txt")});
    CHECK(parse_error.code == 1);
    CHECK(parse_error.err.find("line 3: edge count mismatch") != std::string::npos);
    CHECK(run({"bridges", "--input", "/nonexistent/graph.txt"}).code == 1);
    CHECK(run({"bridges"}, "").code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"bridges", "--format", "xml"}).code == 1);
    CHECK(run({"bridges", "--help"}).code == 0);
}

TEST_CASE("s = t report") {
    const auto r = run({"bridges"}, "3 2 1 1\n0 1\n1 2\n");
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["sequence"] == json::array());
    CHECK(doc["components"] == json::parse("[[1]]"));
}

TEST_CASE("verify subcommand") {
    SUBCASE("file") {
        const auto r = run({"verify", "--input", fixture("six.txt")});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["verdict"] == "PASS");
    }
    SUBCASE("planted chain spec") {
        const auto r = run({"verify", "--family", "planted_chain", "--n", "30", "--planted", "4", "--seed", "3"});
        CHECK(r.code == 0);
    }
    SUBCASE("random corpus") {
        const auto r = run({"verify", "--count", "100", "--seed", "11"});
        CHECK(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(doc["instances"] == 100);
        CHECK(doc["mismatches"] == json::array());
    }
    SUBCASE("unreachable instance") {
        const auto r = run({"verify", "--family", "random_digraph", "--n", "9", "--unreachable"});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["no_path"] == 1);
    }
    SUBCASE("correct report document passes") {
        const std::string path = (std::filesystem::temp_directory_path() / "stcut_cli_test_report.json").string();
        {
            std::ofstream f(path);
            f << run({"cuts", "--input", fixture("six.txt")}).out;
        }
        const auto r = run({"verify", "--input", fixture("six.txt"), "--report", path});
        std::filesystem::remove(path);
        CHECK(r.code == 0);
    }
    SUBCASE("corrupted report yields a structured diff") {
        const auto r = run({"verify", "--input", fixture("six.txt"), "--report", fixture("six_corrupted_report.json")});
        CHECK(r.code == 3);
        const auto doc = json::parse(r.out);
        CHECK(doc["verdict"] == "FAIL");
        REQUIRE(doc["mismatches"].size() == 2);
        CHECK(doc["mismatches"][0]["field"] == "set");
        CHECK(doc["mismatches"][0]["expected"] == json::parse("[0]"));
        CHECK(doc["mismatches"][0]["found"] == json::parse("[1]"));
        CHECK(doc["mismatches"][1]["field"] == "comp");
    }
    SUBCASE("malformed report") {
        CHECK(run({"verify", "--input", fixture("six.txt"), "--report", fixture("chain.txt")}).code == 1);
    }
}

TEST_CASE("gen subcommand") {
    const auto r = run({"gen", "--family", "planted_chain", "--n", "12", "--planted", "3", "--seed", "7"});
    REQUIRE(r.code == 0);
    const auto expected = stcut::generate(stcut::GenSpec{stcut::Family::PlantedChain, 12, 1.0, 7, 3, false});
    const auto parsed = stcut::parse_edge_list(r.out);
    CHECK(parsed.graph == expected.graph);
    CHECK(r.out.find("# planted_articulation 3 4 7 8\n") != std::string::npos);

    // Generated files feed straight back into the other subcommands.
    const auto b = run({"bridges"}, r.out);
    CHECK(json::parse(b.out)["edge_ids"].size() == 2);

    CHECK(run({"gen", "--family", "planted_chain", "--n", "5", "--planted", "3"}).code == 1);
    CHECK(run({"gen", "--family", "nope", "--n", "5"}).code == 1);
    CHECK(run({"gen", "--n", "5"}).code == 1);
}

TEST_CASE("bench subcommand") {
    SUBCASE("trivial size") {
        const auto r = run({"bench", "--family", "parallel_braid", "--n", "2", "--repeat", "1"});
        REQUIRE(r.code == 0);
        std::istringstream lines(r.out);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        CHECK(header == "n\tm\twall_ms\tvisited\tphases\tedge_scans\tpath_len");
        CHECK(row.rfind("2\t", 0) == 0);
        CHECK(row.substr(row.rfind('\t') + 1) == "1");
    }
    SUBCASE("json sweep") {
        const auto r = run({"bench", "--n", "300", "--steps", "3", "--planted", "10", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        REQUIRE(doc["rows"].size() == 3);
        CHECK(doc["rows"][2]["n"] == 1200);
        CHECK(doc["rows"][2]["phases"] == 10);
    }
}
