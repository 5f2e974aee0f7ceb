#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "stcut/articulation.hpp"
#include "stcut/error.hpp"
#include "stcut/gen.hpp"
#include "stcut/oracle.hpp"
#include "stcut/pathfind.hpp"
#include "stcut/verify.hpp"

namespace stcut::cli {

using nlohmann::ordered_json;

namespace {

const char* kind_name(CutKind kind) { return kind == CutKind::Bridge ? "bridges" : "articulation"; }

ordered_json node_array(const std::vector<NodeId>& nodes) {
    ordered_json a = ordered_json::array();
    for (NodeId v : nodes) a.push_back(v.value);
    return a;
}

ordered_json stats_json(const CutReport& r, const DirectedGraph& g) {
    ordered_json stats;
    stats["n"] = g.node_count();
    stats["m"] = g.edge_count();
    stats["path_len"] = r.path.length();
    stats["phases"] = r.stats.phases;
    stats["visited"] = r.stats.visited;
    return stats;
}

void write_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

struct CommonFlags {
    std::string input;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string family;
    std::size_t n = 0;
    double density = 1.0;
    std::optional<std::uint32_t> planted;
    std::size_t limit_paths = kDefaultPathLimit;
    std::string labels;
    bool include_path = false;
    bool unreachable = false;
    std::string queue = "fifo";
};

ParsedGraph load_graph(const std::string& input, std::istream& in) {
    if (input.empty() || input == "-") return parse_edge_list(in);
    std::ifstream file(input, std::ios::binary);
    if (!file) throw Error("cannot open '" + input + "'");
    return parse_edge_list(file);
}

std::vector<std::string> load_labels(const std::string& path, std::size_t n) {
    std::ifstream file(path);
    if (!file) throw Error("cannot open label file '" + path + "'");
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        labels.push_back(line);
    }
    if (labels.size() != n)
        throw Error("label file has " + std::to_string(labels.size()) + " lines, graph has " + std::to_string(n) +
                    " nodes");
    return labels;
}

GenSpec spec_from(const CommonFlags& f) {
    GenSpec spec;
    spec.family = parse_family(f.family);
    spec.n = f.n;
    spec.density = f.density;
    spec.seed = f.seed;
    spec.planted = f.planted;
    spec.unreachable = f.unreachable;
    return spec;
}

unsigned thread_cap() {
    if (const char* env = std::getenv("STCUT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

QueueDiscipline discipline_from(const std::string& name) {
    if (name == "fifo") return QueueDiscipline::Fifo;
    if (name == "lifo") return QueueDiscipline::Lifo;
    throw Error("unknown queue discipline '" + name + "'");
}

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--input", f.input, "Edge-list file (default stdin)");
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--seed", f.seed, "Generator seed");
    cmd->add_option("--family", f.family, "Generator family");
    cmd->add_option("--n", f.n, "Node count");
    cmd->add_option("--density", f.density, "Edges per node");
    cmd->add_option("--planted", f.planted, "Blocks for planted_chain");
    cmd->add_option("--limit-paths", f.limit_paths, "Path enumeration cap for verify");
}

int cmd_report(CutKind kind, const CommonFlags& f, std::istream& in, std::ostream& out) {
    ParsedGraph parsed = load_graph(f.input, in);
    std::vector<std::string> labels;
    if (!f.labels.empty()) labels = load_labels(f.labels, parsed.graph.node_count());

    const QueueDiscipline discipline = discipline_from(f.queue);
    const auto report = kind == CutKind::Bridge
                            ? st_bridges(parsed.graph, parsed.source, parsed.sink, discipline)
                            : st_articulation_points(parsed.graph, parsed.source, parsed.sink, discipline);
    if (!report) {
        if (f.format == "tsv")
            out << "kind\t" << kind_name(kind) << "\nstatus\tno_path\n";
        else
            write_json(out, no_path_document(kind, parsed.graph, parsed.source, parsed.sink));
        return kNoPath;
    }
    ReportOptions options{f.include_path, labels.empty() ? nullptr : &labels};
    if (f.format == "tsv")
        out << report_tsv(*report, parsed.graph, parsed.source, parsed.sink, options);
    else
        write_json(out, report_document(*report, parsed.graph, parsed.source, parsed.sink, options));
    return kOk;
}

ordered_json mismatch_json(const Mismatch& m, std::optional<std::size_t> instance) {
    ordered_json j;
    if (instance) j["instance"] = *instance;
    j["kind"] = m.kind;
    j["field"] = m.field;
    j["expected"] = m.expected;
    j["found"] = m.found;
    return j;
}

// Checks a report document produced elsewhere against the oracle.
std::vector<Mismatch> check_report_document(const ordered_json& doc, const DirectedGraph& g, NodeId s, NodeId t,
                                            std::size_t limit, unsigned threads) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind != "bridges" && kind != "articulation") throw Error("report has unknown kind '" + kind + "'");
    const bool reachable = reachable_set(g, s)[t.value] != 0;
    const bool says_no_path = doc.value("status", std::string("ok")) == "no_path";
    std::vector<Mismatch> out;
    if (!reachable || says_no_path) {
        if (reachable != !says_no_path) out.push_back({kind, "no_path", {}, {}});
        return out;
    }
    const auto found_seq = doc.at(kind == "bridges" ? "edge_ids" : "sequence").get<std::vector<std::uint32_t>>();
    const auto found_comp = doc.at("comp").get<std::vector<std::uint32_t>>();
    OracleReport oracle = compute_oracle(g, s, t, limit, threads);
    if (kind == "bridges")
        compare_cuts(kind, raw_ids(oracle.bridge_order), found_seq, oracle.comp_bridge, found_comp, out);
    else
        compare_cuts(kind, raw_ids(oracle.articulation_order), found_seq, oracle.comp_artic, found_comp, out);
    return out;
}

void check_planted(const GeneratedInstance& inst, std::vector<Mismatch>& out) {
    if (!inst.planted_truth) return;
    const auto bridges = st_bridges(inst.graph, inst.source, inst.sink);
    const auto cuts = st_articulation_points(inst.graph, inst.source, inst.sink);
    const auto expect_b = raw_ids(inst.planted_truth->bridges);
    const auto expect_a = raw_ids(inst.planted_truth->articulation);
    if (!bridges || raw_ids(bridges->bridges) != expect_b)
        out.push_back({"bridges", "planted", expect_b, bridges ? raw_ids(bridges->bridges) : std::vector<std::uint32_t>{}});
    if (!cuts || raw_ids(cuts->articulation_points) != expect_a)
        out.push_back(
            {"articulation", "planted", expect_a, cuts ? raw_ids(cuts->articulation_points) : std::vector<std::uint32_t>{}});
}

struct VerifyFlags {
    std::string report;
    std::size_t count = 0;
};

int cmd_verify(const CommonFlags& f, const VerifyFlags& v, std::istream& in, std::ostream& out) {
    const unsigned threads = thread_cap();
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    ordered_json mismatches = ordered_json::array();
    std::size_t instances = 0, no_path = 0, paths = 0, truncated = 0;

    const auto record = [&](const Verdict& verdict, std::optional<std::size_t> index) {
        ++instances;
        no_path += verdict.no_path ? 1 : 0;
        paths += verdict.paths_checked;
        truncated += verdict.paths_truncated ? 1 : 0;
        for (const Mismatch& m : verdict.mismatches) mismatches.push_back(mismatch_json(m, index));
    };

    if (v.count > 0) {
        const std::size_t max_n = f.n == 0 ? 12 : std::max<std::size_t>(f.n, 2);
        const auto specs = random_corpus(v.count, f.seed, 2, max_n);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            const GeneratedInstance inst = generate(specs[i]);
            record(verify_instance(inst.graph, inst.source, inst.sink, f.limit_paths, threads), i);
        }
    } else {
        DirectedGraph g;
        NodeId s, t;
        std::optional<GeneratedInstance> generated;
        if (!f.family.empty()) {
            generated = generate(spec_from(f));
            g = generated->graph;
            s = generated->source;
            t = generated->sink;
        } else {
            ParsedGraph parsed = load_graph(f.input, in);
            g = std::move(parsed.graph);
            s = parsed.source;
            t = parsed.sink;
        }
        if (!v.report.empty()) {
            std::ifstream file(v.report);
            if (!file) throw Error("cannot open report '" + v.report + "'");
            const ordered_json report = ordered_json::parse(file);
            ++instances;
            for (const Mismatch& m : check_report_document(report, g, s, t, f.limit_paths, threads))
                mismatches.push_back(mismatch_json(m, std::nullopt));
        } else {
            Verdict verdict = verify_instance(g, s, t, f.limit_paths, threads);
            if (generated) check_planted(*generated, verdict.mismatches);
            record(verdict, std::nullopt);
        }
    }

    const bool pass = mismatches.empty();
    doc["verdict"] = pass ? "PASS" : "FAIL";
    doc["instances"] = instances;
    doc["no_path"] = no_path;
    doc["paths_checked"] = paths;
    doc["paths_truncated"] = truncated;
    doc["mismatches"] = std::move(mismatches);
    write_json(out, doc);
    return pass ? kOk : kMismatch;
}

int cmd_gen(const CommonFlags& f, std::ostream& out) {
    const GenSpec spec = spec_from(f);
    const GeneratedInstance inst = generate(spec);
    out << "# family " << family_name(spec.family) << " n " << spec.n << " density " << spec.density << " seed "
        << spec.seed << '\n';
    if (inst.planted_truth) {
        out << "# planted_bridges";
        for (EdgeId e : inst.planted_truth->bridges) out << ' ' << e.value;
        out << "\n# planted_articulation";
        for (NodeId a : inst.planted_truth->articulation) out << ' ' << a.value;
        out << '\n';
    }
    out << serialize_edge_list(inst.graph, inst.source, inst.sink);
    return kOk;
}

struct BenchFlags {
    std::size_t steps = 1;
    std::size_t repeat = 5;
    std::string kind = "bridges";
};

int cmd_bench(const CommonFlags& f, const BenchFlags& b, std::ostream& out) {
    CommonFlags flags = f;
    if (flags.family.empty()) flags.family = "planted_chain";
    if (flags.n == 0) flags.n = 1000;
    const bool bridges = b.kind == "bridges";
    if (!bridges && b.kind != "cuts") throw Error("--kind must be bridges or cuts");

    ordered_json rows = ordered_json::array();
    if (flags.format == "tsv") out << "n\tm\twall_ms\tvisited\tphases\tedge_scans\tpath_len\n";
    std::size_t n = flags.n;
    for (std::size_t step = 0; step < b.steps; ++step, n *= 2) {
        flags.n = n;
        const GeneratedInstance inst = generate(spec_from(flags));
        std::vector<double> times;
        std::optional<CutReport> last;
        for (std::size_t r = 0; r < std::max<std::size_t>(1, b.repeat); ++r) {
            const auto start = std::chrono::steady_clock::now();
            last = bridges ? st_bridges(inst.graph, inst.source, inst.sink)
                           : st_articulation_points(inst.graph, inst.source, inst.sink);
            times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        const SearchStats stats = last ? last->stats : SearchStats{};
        const std::size_t path_len = last ? last->path.length() : 0;
        if (flags.format == "tsv") {
            out << inst.graph.node_count() << '\t' << inst.graph.edge_count() << '\t' << median << '\t'
                << stats.visited << '\t' << stats.phases << '\t' << stats.edge_scans << '\t' << path_len << '\n';
        } else {
            ordered_json row;
            row["n"] = inst.graph.node_count();
            row["m"] = inst.graph.edge_count();
            row["wall_ms"] = median;
            row["visited"] = stats.visited;
            row["phases"] = stats.phases;
            row["edge_scans"] = stats.edge_scans;
            row["path_len"] = path_len;
            rows.push_back(std::move(row));
        }
    }
    if (flags.format != "tsv") {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["family"] = flags.family;
        doc["kind"] = b.kind;
        doc["rows"] = std::move(rows);
        write_json(out, doc);
    }
    return kOk;
}

}  // namespace

ordered_json no_path_document(CutKind kind, const DirectedGraph& g, NodeId s, NodeId t) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = kind_name(kind);
    doc["status"] = "no_path";
    doc["s"] = s.value;
    doc["t"] = t.value;
    doc["stats"] = {{"n", g.node_count()}, {"m", g.edge_count()}};
    return doc;
}

ordered_json report_document(const CutReport& r, const DirectedGraph& g, NodeId s, NodeId t,
                             const ReportOptions& options) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = kind_name(r.kind);
    doc["status"] = "ok";
    doc["s"] = s.value;
    doc["t"] = t.value;
    ordered_json sequence = ordered_json::array();
    if (r.kind == CutKind::Bridge) {
        ordered_json ids = ordered_json::array();
        for (EdgeId e : r.bridges) {
            sequence.push_back({g.tail(e).value, g.head(e).value});
            ids.push_back(e.value);
        }
        doc["sequence"] = std::move(sequence);
        doc["edge_ids"] = std::move(ids);
    } else {
        doc["sequence"] = node_array(r.articulation_points);
    }
    if (options.labels) {
        const auto& labels = *options.labels;
        ordered_json named = ordered_json::array();
        if (r.kind == CutKind::Bridge)
            for (EdgeId e : r.bridges) named.push_back({labels[g.tail(e).value], labels[g.head(e).value]});
        else
            for (NodeId a : r.articulation_points) named.push_back(labels[a.value]);
        doc["sequence_labels"] = std::move(named);
    }
    ordered_json components = ordered_json::array();
    for (const auto& c : r.components) components.push_back(node_array(c));
    doc["components"] = std::move(components);
    doc["comp"] = r.comp;
    if (options.include_path) doc["path_used"] = node_array(r.path.node_seq());
    doc["stats"] = stats_json(r, g);
    return doc;
}

std::string report_tsv(const CutReport& r, const DirectedGraph& g, NodeId s, NodeId t, const ReportOptions& options) {
    std::ostringstream out;
    out << "kind\t" << kind_name(r.kind) << "\nstatus\tok\ns\t" << s.value << "\nt\t" << t.value << '\n';
    for (std::size_t i = 0; i < r.cut_count(); ++i) {
        out << "cut\t" << i + 1;
        if (r.kind == CutKind::Bridge) {
            const EdgeId e = r.bridges[i];
            out << '\t' << e.value << '\t' << g.tail(e).value << '\t' << g.head(e).value;
        } else {
            out << '\t' << r.articulation_points[i].value;
        }
        out << '\n';
    }
    for (std::size_t v = 0; v < r.comp.size(); ++v) {
        out << "comp\t" << v << '\t' << r.comp[v];
        if (options.labels) out << '\t' << (*options.labels)[v];
        out << '\n';
    }
    if (options.include_path) {
        out << "path";
        for (NodeId v : r.path.node_seq()) out << '\t' << v.value;
        out << '\n';
    }
    out << "stats\tn=" << g.node_count() << "\tm=" << g.edge_count() << "\tpath_len=" << r.path.length()
        << "\tphases=" << r.stats.phases << "\tvisited=" << r.stats.visited << '\n';
    return out.str();
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"s-t bridges and articulation points of directed graphs", "stcut"};
    app.require_subcommand(1);
    CommonFlags flags;
    VerifyFlags verify_flags;
    BenchFlags bench_flags;

    auto* bridges = app.add_subcommand("bridges", "Ordered s-t bridges and bridge components");
    auto* cuts = app.add_subcommand("cuts", "Ordered s-t articulation points and their components");
    for (auto* cmd : {bridges, cuts}) {
        add_common(cmd, flags);
        cmd->add_flag("--path", flags.include_path, "Include the s-t path used");
        cmd->add_option("--labels", flags.labels, "Node label file, one label per line");
        cmd->add_option("--queue", flags.queue, "Search queue discipline")->check(CLI::IsMember({"fifo", "lifo"}));
    }
    auto* verify = app.add_subcommand("verify", "Check the algorithms against the deletion oracle");
    add_common(verify, flags);
    verify->add_option("--report", verify_flags.report, "Check this report document instead of recomputing");
    verify->add_option("--count", verify_flags.count, "Verify a random corpus of this many instances");
    verify->add_flag("--unreachable", flags.unreachable, "Generate an instance with t unreachable");
    auto* gen = app.add_subcommand("gen", "Generate an instance in edge-list format");
    add_common(gen, flags);
    gen->add_flag("--unreachable", flags.unreachable, "Drop every edge into t");
    auto* bench = app.add_subcommand("bench", "Time the bridge search over a doubling size sweep");
    add_common(bench, flags);
    bench->add_option("--steps", bench_flags.steps, "Number of doublings of --n");
    bench->add_option("--repeat", bench_flags.repeat, "Runs per size; the median is reported");
    bench->add_option("--kind", bench_flags.kind, "bridges or cuts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*bridges) return cmd_report(CutKind::Bridge, flags, in, out);
        if (*cuts) return cmd_report(CutKind::Articulation, flags, in, out);
        if (*verify) return cmd_verify(flags, verify_flags, in, out);
        if (*gen) {
            if (flags.family.empty()) throw Error("gen requires --family");
            return cmd_gen(flags, out);
        }
        if (*bench) {
            if (bench->get_option("--format")->count() == 0) flags.format = "tsv";
            return cmd_bench(flags, bench_flags, out);
        }
    } catch (const Error& e) {
        err << "stcut: " << e.what() << '\n';
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "stcut: malformed report: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace stcut::cli
